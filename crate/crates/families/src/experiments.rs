//! Experiment suites (regularity of powers, lemma checks).
