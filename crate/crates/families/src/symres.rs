//! Symmetric-algebra presentations and resolutions.
