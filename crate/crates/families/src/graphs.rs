//! Simple graphs with the two parameterized builders used throughout: a
//! central path (or cycle) with two pendant paths attached at a common
//! vertex. Vertices are numbered spine-first, then the first pendant path,
//! then the second.

use devtwo_engine::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuilderTag {
    /// Path spine of length `l`, pendant paths of lengths `m` and `n`
    /// attached at spine vertex `attach` (1-based, non-pendant).
    G1 { l: usize, m: usize, n: usize, attach: usize },
    /// Cycle spine of length `l`, pendant paths at cycle vertex `attach`.
    G2 { l: usize, m: usize, n: usize, attach: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub nverts: usize,
    /// Unordered edges as sorted 0-based pairs, in construction order.
    pub edges: Vec<(usize, usize)>,
    pub builder: Option<BuilderTag>,
}

impl GraphSpec {
    pub fn new(nverts: usize, edges: Vec<(usize, usize)>) -> Result<GraphSpec> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            if u >= nverts || v >= nverts {
                return Err(Error::InvalidGraph(format!(
                    "edge ({},{}) out of range",
                    u, v
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", u)));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({},{})",
                    u, v
                )));
            }
        }
        let edges = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Ok(GraphSpec {
            nverts,
            edges,
            builder: None,
        })
    }

    /// Path on `n` vertices 0-1-...-(n-1).
    pub fn path(n: usize) -> Result<GraphSpec> {
        GraphSpec::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.iter().any(|&e| e == key)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.nverts];
        let mut count = 0;
        for start in 0..self.nverts {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn with_extra_edge(&self, u: usize, v: usize) -> Result<GraphSpec> {
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        GraphSpec::new(self.nverts, edges)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> GraphSpec {
        let key = (u.min(v), u.max(v));
        GraphSpec {
            nverts: self.nverts,
            edges: self.edges.iter().copied().filter(|&e| e != key).collect(),
            builder: None,
        }
    }

    /// An added edge {u,v} is a bridge of G ∪ {u,v} when removing it from the
    /// union increases the component count, i.e. u and v lie in different
    /// components of G.
    pub fn is_bridge_when_added(&self, u: usize, v: usize) -> bool {
        // components of G itself
        let mut seen = vec![false; self.nverts];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            for w in self.neighbors(x) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        !seen[v]
    }

    /// Completion at the endpoints of e = {i,j}: adds every edge between two
    /// neighbors of i and between two neighbors of j.
    pub fn neighbor_completion(&self, i: usize, j: usize) -> GraphSpec {
        let mut edges = self.edges.clone();
        let mut have: std::collections::HashSet<(usize, usize)> =
            edges.iter().copied().collect();
        for v in [i, j] {
            let ns = self.neighbors(v);
            for (a, &p) in ns.iter().enumerate() {
                for &q in &ns[a + 1..] {
                    let key = (p.min(q), p.max(q));
                    if have.insert(key) {
                        edges.push(key);
                    }
                }
            }
        }
        GraphSpec {
            nverts: self.nverts,
            edges,
            builder: None,
        }
    }

    /// All simple paths i = v_0, v_1, ..., v_s, v_{s+1} = j with s >= 1 inner
    /// vertices, listed from i to j; each path is the inner-vertex sequence.
    pub fn inner_paths(&self, i: usize, j: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut visited = vec![false; self.nverts];
        visited[i] = true;
        let mut trail: Vec<usize> = Vec::new();
        self.dfs_paths(i, j, &mut visited, &mut trail, &mut out);
        out.sort();
        out
    }

    fn dfs_paths(
        &self,
        at: usize,
        goal: usize,
        visited: &mut Vec<bool>,
        trail: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for w in self.neighbors(at) {
            if w == goal {
                if !trail.is_empty() {
                    out.push(trail.clone());
                }
                continue;
            }
            if !visited[w] {
                visited[w] = true;
                trail.push(w);
                self.dfs_paths(w, goal, visited, trail, out);
                trail.pop();
                visited[w] = false;
            }
        }
    }
}

/// Spine path alpha_1..alpha_l with pendant paths beta_1..beta_m and
/// gamma_1..gamma_n attached at the non-pendant spine vertex alpha_attach.
/// Edge order: spine edges by position, then the beta path, then gamma.
pub fn build_g1(l: usize, m: usize, n: usize, attach: usize) -> Result<GraphSpec> {
    if l < 2 {
        return Err(Error::InvalidParameter("spine needs at least 2 vertices".into()));
    }
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameter("pendant paths need >= 1 vertex".into()));
    }
    if !(1 < attach && attach < l) {
        return Err(Error::InvalidParameter(format!(
            "attachment vertex {} must be interior to the spine (1 < j < {})",
            attach, l
        )));
    }
    let nverts = l + m + n;
    let a = |i: usize| i - 1; // alpha_i
    let b = |i: usize| l + i - 1; // beta_i
    let c = |i: usize| l + m + i - 1; // gamma_i
    let mut edges = Vec::new();
    for i in 1..l {
        edges.push((a(i), a(i + 1)));
    }
    edges.push((a(attach), b(1)));
    for i in 1..m {
        edges.push((b(i), b(i + 1)));
    }
    edges.push((a(attach), c(1)));
    for i in 1..n {
        edges.push((c(i), c(i + 1)));
    }
    let mut g = GraphSpec::new(nverts, edges)?;
    g.builder = Some(BuilderTag::G1 { l, m, n, attach });
    Ok(g)
}

/// Spine cycle alpha_1..alpha_l with pendant paths attached at alpha_attach.
/// Edge order: cycle edges by position (closing edge last), then beta, then
/// gamma.
pub fn build_g2(l: usize, m: usize, n: usize, attach: usize) -> Result<GraphSpec> {
    if l < 3 {
        return Err(Error::InvalidParameter("cycle needs at least 3 vertices".into()));
    }
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameter("pendant paths need >= 1 vertex".into()));
    }
    if !(1 <= attach && attach <= l) {
        return Err(Error::InvalidParameter(format!(
            "attachment vertex {} outside the cycle",
            attach
        )));
    }
    let nverts = l + m + n;
    let a = |i: usize| i - 1;
    let b = |i: usize| l + i - 1;
    let c = |i: usize| l + m + i - 1;
    let mut edges = Vec::new();
    for i in 1..l {
        edges.push((a(i), a(i + 1)));
    }
    edges.push((a(l), a(1)));
    edges.push((a(attach), b(1)));
    for i in 1..m {
        edges.push((b(i), b(i + 1)));
    }
    edges.push((a(attach), c(1)));
    for i in 1..n {
        edges.push((c(i), c(i + 1)));
    }
    let mut g = GraphSpec::new(nverts, edges)?;
    g.builder = Some(BuilderTag::G2 { l, m, n, attach });
    Ok(g)
}

/// Parses a line-based edge list, `u v` per line, 1-based vertices.
pub fn parse_edge_list(text: &str) -> Result<GraphSpec> {
    let mut edges = Vec::new();
    let mut maxv = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!(
                "edge list line {}: expected `u v`",
                lineno + 1
            )));
        }
        let u: usize = parts[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex `{}`", parts[0])))?;
        let v: usize = parts[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex `{}`", parts[1])))?;
        if u == 0 || v == 0 {
            return Err(Error::Parse("vertices are 1-based".into()));
        }
        maxv = maxv.max(u).max(v);
        edges.push((u - 1, v - 1));
    }
    GraphSpec::new(maxv, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_small_shape() {
        let g = build_g1(3, 1, 1, 2).unwrap();
        assert_eq!(g.nverts, 5);
        assert_eq!(
            g.edges,
            vec![(0, 1), (1, 2), (1, 3), (1, 4)]
        );
        assert!(build_g1(2, 1, 1, 1).is_err());
        assert!(build_g1(3, 1, 1, 3).is_err());
    }

    #[test]
    fn g2_small_shape() {
        let g = build_g2(3, 1, 1, 1).unwrap();
        assert_eq!(g.nverts, 5);
        assert_eq!(
            g.edges,
            vec![(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]
        );
        assert!(build_g2(2, 1, 1, 1).is_err());
    }

    #[test]
    fn bridges_and_completions() {
        // two disjoint edges {1,2},{3,4}; adding {2,3} is a bridge
        let g = GraphSpec::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(g.is_bridge_when_added(1, 2));
        let p3 = GraphSpec::path(3).unwrap();
        // closing the path into a triangle is not a bridge
        assert!(!p3.is_bridge_when_added(0, 2));
        let comp = p3.neighbor_completion(0, 1);
        // neighbors of 1 are {0,2}: adds the edge {0,2}
        assert!(comp.has_edge(0, 2));
        assert_eq!(comp.edges.len(), 3);
    }

    #[test]
    fn inner_path_enumeration() {
        // cycle on 4 vertices: between adjacent 0 and 1 the only inner path
        // goes through 3, 2
        let c4 = GraphSpec::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let paths = c4.inner_paths(0, 1);
        assert_eq!(paths, vec![vec![3, 2]]);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = parse_edge_list("1 2\n2 3\n").unwrap();
        assert_eq!(g.edges, vec![(0, 1), (1, 2)]);
        assert!(parse_edge_list("1 1\n").is_err());
        assert!(parse_edge_list("1\n").is_err());
    }
}
