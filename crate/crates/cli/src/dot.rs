//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use posetlab_core::Poset;

fn quote(label: &str) -> String {
    let plain: String = label
        .chars()
        .flat_map(|c| match c {
            '′' => "'".chars().collect::<Vec<_>>(),
            '″' => "''".chars().collect(),
            '‴' => "'''".chars().collect(),
            c => vec![c],
        })
        .collect();
    format!("\"{}\"", plain.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per element, one edge per cover (drawn bottom to top). Graded
/// posets get one `rank=same` subgraph per level.
pub fn to_dot(p: &Poset) -> String {
    let mut out = String::new();
    out.push_str("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    let node = |x: usize| format!("n{x} [label={}];", quote(p.label(x)));
    match p.levels() {
        Ok(levels) => {
            for (r, level) in levels.iter().enumerate() {
                writeln!(out, "  subgraph rank{r} {{\n    rank=same;").unwrap();
                for &x in level {
                    writeln!(out, "    {}", node(x)).unwrap();
                }
                out.push_str("  }\n");
            }
        }
        Err(_) => {
            for x in 0..p.len() {
                writeln!(out, "  {}", node(x)).unwrap();
            }
        }
    }
    for &(a, b) in p.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use posetlab_core::catalog::{isotropic, total};
    use posetlab_core::chain_poset;

    #[test]
    fn t1_cubed() {
        let dot = to_dot(&chain_poset(&total(1), 3).unwrap());
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(dot.matches("->").count(), 3);
        assert_eq!(dot.matches("rank=same").count(), 4);
        assert!(dot.contains("n2 [label=\"011\"];"));
    }

    #[test]
    fn primes_and_quotes() {
        let dot = to_dot(&isotropic(1));
        assert!(dot.contains("[label=\"{1'}\"]"));
        assert_eq!(quote("a\"b\\"), "\"a\\\"b\\\\\"");
    }

    #[test]
    fn ungraded_has_no_rank_groups() {
        let p = Poset::from_covers(["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("c", "d")]).unwrap();
        let dot = to_dot(&p);
        assert_eq!(dot.matches("rank=same").count(), 0);
        assert_eq!(dot.matches("[label=").count(), 4);
    }
}
