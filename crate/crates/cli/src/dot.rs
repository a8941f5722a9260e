use std::fmt::Write as _;

use ordergap::Poset;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram in DOT, edges pointing from lower to upper covers. Nodes
/// appear in index order and edges in lexicographic order.
pub fn render_dot(p: &Poset, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, label) in p.labels().iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(label)).unwrap();
    }
    for (lo, hi) in p.covers() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ordergap::sierpinski::{generate_lattice, SierpinskiChain};
    use ordergap::Limits;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    fn nodes(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("[label=")).count()
    }

    #[test]
    fn hasse_diagrams() {
        let c3 = render_dot(&Poset::chain(3).unwrap(), "P");
        assert_eq!((nodes(&c3), edges(&c3)), (3, 2));
        let butterfly =
            Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap();
        let d = render_dot(&butterfly, "P");
        assert_eq!((nodes(&d), edges(&d)), (4, 4));
        assert!(d.starts_with("digraph \"P\" {\n  rankdir=BT;\n  n0 [label=\"a\"];"));
    }

    #[test]
    fn sierpinski_lattice_diagram() {
        let sc = SierpinskiChain::with_integer_points(vec![1, 0, 2]).unwrap();
        let lp = generate_lattice(&sc, &Limits::default()).unwrap().poset();
        let d = render_dot(&lp, "L");
        assert_eq!((nodes(&d), edges(&d)), (5, 5));
        for edge in ["n0 -> n1", "n0 -> n2", "n1 -> n3", "n2 -> n3", "n3 -> n4"] {
            assert!(d.contains(edge), "{edge}");
        }
    }

    #[test]
    fn labels_are_escaped() {
        let p = Poset::from_covers(&["x\"y"], &[] as &[(&str, &str)]).unwrap();
        assert!(render_dot(&p, "P").contains(r#"[label="x\"y"]"#));
    }
}
