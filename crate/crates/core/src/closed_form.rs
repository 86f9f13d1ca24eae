//! Optimal colorings of cycles and complete graphs without search.
//!
//! Vertex `v_i` of the constructions is vertex id `i - 1`.

use alloc::vec::Vec;

use crate::graph::{Color, Graph, IncidenceColoring, VertexId};
use crate::{Error, Result};

/// The cycle `v_1 v_2 ... v_n`; edge `i - 1` joins `v_i` and `v_{i+1}`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OrderTooSmall { min: 3, got: n });
    }
    Graph::with_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_n` with edges in lexicographic order.
pub fn complete_graph(n: usize) -> Graph {
    Graph::with_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
        .expect("lexicographic pairs are distinct")
}

/// Optimal coloring of `C_n`: 6 colors for `n = 3`, 4 for even `n`, 5 for
/// odd `n >= 5`.
///
/// Even cycles alternate `{1,2}` and `{3,4}`. Odd cycles alternate on all
/// but the last three edges, which get `{1,5}`, `{2,3}` and `{4,5}`.
pub fn color_cycle(n: usize) -> Result<(Graph, IncidenceColoring)> {
    let g = cycle_graph(n)?;
    let alternate = |i: usize| -> [Color; 2] {
        if i.is_multiple_of(2) {
            [1, 2]
        } else {
            [3, 4]
        }
    };
    let pairs: Vec<[Color; 2]> = if n == 3 {
        Vec::from([[1, 2], [3, 4], [5, 6]])
    } else if n.is_multiple_of(2) {
        (0..n).map(alternate).collect()
    } else {
        let mut p: Vec<[Color; 2]> = (0..n - 3).map(alternate).collect();
        p.extend([[1, 5], [2, 3], [4, 5]]);
        p
    };
    // Each pair is listed as (color at v_i, color at v_{i+1}); the closing
    // edge v_n v_1 stores v_1 first.
    let mut c = IncidenceColoring::uncolored(n);
    for (e, u, _) in g.edges() {
        let [a, b] = pairs[e.index()];
        c.set_pair(e, if u.index() == e.index() { [a, b] } else { [b, a] });
    }
    Ok((g, c))
}

/// The color class `E_i` of the polygon construction for `K_n`, as pairs of
/// 0-based vertex ids. `i` ranges over `1..n` for even `n` and `1..=n` for
/// odd `n`.
pub fn polygon_class(n: usize, i: usize) -> Vec<(usize, usize)> {
    let mut class = Vec::new();
    if n.is_multiple_of(2) {
        // v_1..v_{n-1} on a regular (n-1)-gon, v_n at its center.
        let m = n - 1;
        let at = |k: isize| -> usize { (k - 1).rem_euclid(m as isize) as usize };
        for j in 1..=(n - 2) / 2 {
            let (j, i) = (j as isize, i as isize);
            class.push((at(i - j), at(i + j)));
        }
        class.push((i - 1, n - 1));
    } else {
        let at = |k: isize| -> usize { (k - 1).rem_euclid(n as isize) as usize };
        for j in 0..=(n - 3) / 2 {
            let (j, i) = (j as isize, i as isize);
            class.push((at(i - j), at(i + j + 1)));
        }
    }
    class
}

/// Number of polygon color classes of `K_n`.
pub fn polygon_class_count(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n - 1
    } else {
        n
    }
}

/// Optimal coloring of `K_n` by the polygon method: class `E_i` receives the
/// pair `{2i - 1, 2i}`, for `2n - 2` colors when `n` is even and `2n` when
/// `n` is odd.
pub fn color_complete(n: usize) -> Result<(Graph, IncidenceColoring)> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: n });
    }
    let g = complete_graph(n);
    let mut c = IncidenceColoring::uncolored(g.edge_count());
    for i in 1..=polygon_class_count(n) {
        let pair = [2 * i as Color - 1, 2 * i as Color];
        for (a, b) in polygon_class(n, i) {
            let e = g
                .edge_between(VertexId(a), VertexId(b))
                .expect("polygon classes use edges of K_n");
            c.set_pair(e, pair);
        }
    }
    Ok((g, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{palette_count, verify, EdgeId};
    use crate::oracle::chi_exact;

    fn sets(c: &IncidenceColoring) -> Vec<[Color; 2]> {
        c.pairs()
            .iter()
            .map(|&[a, b]| [a.min(b), a.max(b)])
            .collect()
    }

    #[test]
    fn triangle() {
        let (g, c) = color_cycle(3).unwrap();
        assert_eq!(sets(&c), vec![[1, 2], [3, 4], [5, 6]]);
        assert!(verify(&g, &c).is_ok());
        assert_eq!(palette_count(&c), 6);
    }

    #[test]
    fn four_cycle() {
        let (g, c) = color_cycle(4).unwrap();
        assert_eq!(sets(&c), vec![[1, 2], [3, 4], [1, 2], [3, 4]]);
        assert!(verify(&g, &c).is_ok());
        assert_eq!(palette_count(&c), 4);
    }

    #[test]
    fn five_cycle() {
        let (g, c) = color_cycle(5).unwrap();
        assert_eq!(sets(&c), vec![[1, 2], [3, 4], [1, 5], [2, 3], [4, 5]]);
        assert!(verify(&g, &c).is_ok());
        assert_eq!(palette_count(&c), 5);
        // v_3 v_4 is colored 1 at v_3 and 5 at v_4.
        assert_eq!(c.pair(EdgeId(2)), [1, 5]);
        // closing edge v_5 v_1: 4 at v_5, 5 at v_1
        assert_eq!(c.pair(EdgeId(4)), [5, 4]);
    }

    #[test]
    fn cycle_too_short() {
        assert_eq!(
            color_cycle(2).unwrap_err(),
            Error::OrderTooSmall { min: 3, got: 2 }
        );
    }

    #[test]
    fn cycle_palettes_up_to_twenty() {
        for n in 3..=20 {
            let (g, c) = color_cycle(n).unwrap();
            assert!(verify(&g, &c).is_ok(), "n = {n}");
            let want = if n == 3 {
                6
            } else if n % 2 == 0 {
                4
            } else {
                5
            };
            assert_eq!(palette_count(&c), want, "n = {n}");
        }
    }

    #[test]
    fn cycles_match_oracle() {
        for n in 3..=9 {
            let (g, c) = color_cycle(n).unwrap();
            assert_eq!(palette_count(&c), chi_exact(&g).unwrap().chi, "n = {n}");
        }
    }

    #[test]
    fn complete_small_cases() {
        let (g, c) = color_complete(2).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(c.pairs(), &[[1, 2]]);
        let (g, c) = color_complete(4).unwrap();
        assert!(verify(&g, &c).is_ok());
        assert_eq!(palette_count(&c), 6);
        let (g, c) = color_complete(5).unwrap();
        assert!(verify(&g, &c).is_ok());
        assert_eq!(palette_count(&c), 10);
        assert!(color_complete(1).is_err());
    }

    #[test]
    fn polygon_classes_are_matchings_partitioning_kn() {
        for n in 2..=8 {
            let mut seen = Vec::new();
            for i in 1..=polygon_class_count(n) {
                let class = polygon_class(n, i);
                let mut ends: Vec<usize> = class.iter().flat_map(|&(a, b)| [a, b]).collect();
                ends.sort_unstable();
                let before = ends.len();
                ends.dedup();
                assert_eq!(before, ends.len(), "E_{i} of K_{n} is not a matching");
                for (a, b) in class {
                    assert_ne!(a, b);
                    seen.push((a.min(b), a.max(b)));
                }
            }
            seen.sort_unstable();
            let total = seen.len();
            seen.dedup();
            assert_eq!(total, seen.len(), "classes of K_{n} overlap");
            assert_eq!(total, n * (n - 1) / 2);
            let (g, c) = color_complete(n).unwrap();
            assert!(verify(&g, &c).is_ok());
            let want = if n % 2 == 0 { 2 * n - 2 } else { 2 * n };
            assert_eq!(palette_count(&c), want);
        }
    }
}
