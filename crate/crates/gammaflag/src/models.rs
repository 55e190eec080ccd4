//! Independent geometric and polytopal oracles: Coxeter complexes of types A
//! and B as barycentric subdivisions, the polygon-diagonal associahedron,
//! tabulated gamma-vectors of the exceptional Coxeter groups, and an
//! exhaustive enumerator of small flag 2-spheres.

use itertools::Itertools;

use crate::complex::{Complex, VertexId};
use crate::homology;
use crate::permstats::CoxeterType;
use crate::vectors::GammaVector;
use crate::{Error, Result};

/// The type-A Coxeter complex realized as the order complex of nonempty
/// proper subsets of [n] (A, n <= 6), or the type-B complex as the order
/// complex of the proper face poset of the boundary of the n-cross-polytope
/// (B, n <= 4). Both are barycentric subdivisions, hence flag.
pub fn coxeter_complex(kind: CoxeterType, n: u8) -> Result<Complex> {
    match kind {
        CoxeterType::A => {
            if n < 2 || n > 6 {
                return Err(Error::Budget(format!(
                    "coxeter_complex(A, n) supports 2 <= n <= 6, got {}",
                    n
                )));
            }
            // poset elements: nonempty proper subsets of [n], as bitmasks
            let full = (1u32 << n) - 1;
            let elements: Vec<u32> = (1..full)
                .sorted_by_key(|&m| (m.count_ones(), m))
                .collect();
            order_complex(&elements, |a, b| a & b == a && a != b)
        }
        CoxeterType::B => {
            if n < 1 || n > 4 {
                return Err(Error::Budget(format!(
                    "coxeter_complex(B, n) supports 1 <= n <= 4, got {}",
                    n
                )));
            }
            // poset elements: nonempty faces of the cross-polytope boundary,
            // i.e. sign-vector pairs (pos, neg) with disjoint supports
            let mut elements: Vec<(u32, u32)> = Vec::new();
            for pos in 0u32..(1 << n) {
                for neg in 0u32..(1 << n) {
                    if pos & neg == 0 && pos | neg != 0 {
                        elements.push((pos, neg));
                    }
                }
            }
            elements.sort_by_key(|&(p, q)| ((p | q).count_ones(), p, q));
            order_complex(&elements, |a, b| {
                a != b && a.0 & b.0 == a.0 && a.1 & b.1 == a.1
            })
        }
        CoxeterType::D => Err(Error::Domain(
            "no subdivision model for type D; use the signed-permutation oracle".into(),
        )),
    }
}

/// Order complex of a finite poset given by a strict comparability test:
/// the clique complex of the comparability graph.
fn order_complex<T: Copy>(elements: &[T], less: impl Fn(T, T) -> bool) -> Result<Complex> {
    let ids: Vec<VertexId> = (0..elements.len() as VertexId).collect();
    let mut edges = Vec::new();
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            if less(elements[i], elements[j]) || less(elements[j], elements[i]) {
                edges.push((i as VertexId, j as VertexId));
            }
        }
    }
    Complex::clique_complex(&ids, &edges)
}

/// The simplicial complex dual to the associahedron: vertices are the
/// diagonals of a convex (n+2)-gon, faces the pairwise-noncrossing diagonal
/// sets (n <= 8).
pub fn associahedron_complex(n: u8) -> Result<Complex> {
    if n < 2 || n > 8 {
        return Err(Error::Budget(format!(
            "associahedron_complex supports 2 <= n <= 8, got {}",
            n
        )));
    }
    let m = n as u32 + 2;
    let mut diagonals: Vec<(u32, u32)> = Vec::new();
    for a in 0..m {
        for b in (a + 2)..m {
            if a == 0 && b == m - 1 {
                continue; // polygon edge, not a diagonal
            }
            diagonals.push((a, b));
        }
    }
    let crossing = |p: (u32, u32), q: (u32, u32)| -> bool {
        (p.0 < q.0 && q.0 < p.1 && p.1 < q.1) || (q.0 < p.0 && p.0 < q.1 && q.1 < p.1)
    };
    let ids: Vec<VertexId> = (0..diagonals.len() as VertexId).collect();
    let mut edges = Vec::new();
    for i in 0..diagonals.len() {
        for j in (i + 1)..diagonals.len() {
            if !crossing(diagonals[i], diagonals[j]) {
                edges.push((i as VertexId, j as VertexId));
            }
        }
    }
    Complex::clique_complex(&ids, &edges)
}

/// Exceptional finite Coxeter groups with tabulated gamma-vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalGroup {
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    I2(u32),
}

/// The tabulated gamma-vector of an exceptional Coxeter complex.
pub fn exceptional_gamma(group: ExceptionalGroup) -> Result<GammaVector> {
    use ExceptionalGroup::*;
    Ok(GammaVector(match group {
        E6 => vec![1, 1266, 7104, 3104],
        E7 => vec![1, 17628, 221808, 282176],
        E8 => vec![1, 881744, 23045856, 63613184, 17111296],
        F4 => vec![1, 232, 208],
        G2 => vec![1, 8],
        H3 => vec![1, 56],
        H4 => vec![1, 2632, 3856],
        I2(m) => {
            if m < 3 {
                return Err(Error::Domain(format!("I2(m) needs m >= 3, got {}", m)));
            }
            vec![1, 2 * m as i64 - 4]
        }
    }))
}

pub fn all_exceptional() -> Vec<(String, GammaVector)> {
    use ExceptionalGroup::*;
    let mut out: Vec<(String, GammaVector)> = [E6, E7, E8, F4, G2, H3, H4]
        .iter()
        .map(|&g| (format!("{:?}", g), exceptional_gamma(g).unwrap()))
        .collect();
    for m in 3..=12 {
        out.push((format!("I2({})", m), exceptional_gamma(I2(m)).unwrap()));
    }
    out
}

/// All flag 2-spheres on at most `max_vertices` vertices (max 8), one
/// representative per isomorphism class, vertices canonically relabeled.
///
/// For each n the scan covers every graph on n labeled vertices with exactly
/// 3n-6 edges, filters by the local sphere conditions (degrees >= 4, every
/// edge in exactly two triangles, no 4-clique, vertex links single cycles,
/// connected), deduplicates up to isomorphism, and certifies each survivor
/// with the homology-sphere predicate.
pub fn enumerate_flag_2spheres(max_vertices: u8) -> Result<Vec<Complex>> {
    if max_vertices > 8 {
        return Err(Error::Budget(format!(
            "enumerate_flag_2spheres supports max_vertices <= 8, got {}",
            max_vertices
        )));
    }
    let mut out = Vec::new();
    for n in 4..=max_vertices {
        for mask in scan_candidate_graphs(n) {
            let complex = complex_from_graph_mask(n, mask);
            debug_assert!(complex.is_flag().unwrap());
            if homology::is_homology_sphere(&complex)? {
                out.push(complex);
            }
        }
    }
    Ok(out)
}

/// Edge slots for K_n, in lexicographic order.
fn edge_slots(n: u8) -> Vec<(u8, u8)> {
    let mut slots = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            slots.push((i, j));
        }
    }
    slots
}

fn complex_from_graph_mask(n: u8, mask: u32) -> Complex {
    let slots = edge_slots(n);
    let vertices: Vec<VertexId> = (1..=n as VertexId).collect();
    let edges: Vec<(VertexId, VertexId)> = slots
        .iter()
        .enumerate()
        .filter(|&(s, _)| mask & (1 << s) != 0)
        .map(|(_, &(i, j))| (i as VertexId + 1, j as VertexId + 1))
        .collect();
    Complex::clique_complex(&vertices, &edges).expect("small graph fits any budget")
}

/// Scan all n-vertex graphs with 3n-6 edges; return canonical masks of the
/// isomorphism classes passing the local flag-2-sphere filters.
fn scan_candidate_graphs(n: u8) -> Vec<u32> {
    let slots = edge_slots(n);
    let m = slots.len();
    let e = 3 * n as usize - 6;
    if e > m {
        return vec![];
    }
    let mut incident = vec![0u32; n as usize];
    for (s, &(i, j)) in slots.iter().enumerate() {
        incident[i as usize] |= 1 << s;
        incident[j as usize] |= 1 << s;
    }

    let mut reps: Vec<(Vec<u8>, Vec<u32>)> = Vec::new(); // degree-sequence key -> class masks
    let mut mask: u64 = (1u64 << e) - 1;
    let last = ((1u64 << e) - 1) << (m - e);
    loop {
        let g = mask as u32;
        if degrees_ok(n, g, &incident) && local_sphere_conditions(n, g, &slots) {
            record_up_to_iso(n, g, &slots, &mut reps);
        }
        if mask == last {
            break;
        }
        // Gosper's hack: next mask with the same popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }

    let mut canon: Vec<u32> = reps
        .iter()
        .flat_map(|(_, masks)| masks.iter().map(|&g| canonical_graph_mask(n, g, &slots)))
        .collect();
    canon.sort_unstable();
    canon
}

fn degrees_ok(n: u8, mask: u32, incident: &[u32]) -> bool {
    (0..n as usize).all(|v| (mask & incident[v]).count_ones() >= 4)
}

fn adjacency_bits(n: u8, mask: u32, slots: &[(u8, u8)]) -> Vec<u16> {
    let mut adj = vec![0u16; n as usize];
    for (s, &(i, j)) in slots.iter().enumerate() {
        if mask & (1 << s) != 0 {
            adj[i as usize] |= 1 << j;
            adj[j as usize] |= 1 << i;
        }
    }
    adj
}

/// Local conditions making the clique complex a closed surface with chi = 2:
/// every edge in exactly two triangles with its common neighbors non-adjacent
/// (no K4), every vertex link a single cycle, graph connected.
fn local_sphere_conditions(n: u8, mask: u32, slots: &[(u8, u8)]) -> bool {
    let adj = adjacency_bits(n, mask, slots);
    for (s, &(i, j)) in slots.iter().enumerate() {
        if mask & (1 << s) == 0 {
            continue;
        }
        let common = adj[i as usize] & adj[j as usize];
        if common.count_ones() != 2 {
            return false;
        }
        let x = common.trailing_zeros() as usize;
        let y = (common & !(1u16 << x)).trailing_zeros() as usize;
        if adj[x] & (1 << y) != 0 {
            return false; // K4
        }
    }
    // each vertex link is one cycle: 2-regular (implied) and connected
    for v in 0..n as usize {
        let nbrs = adj[v];
        let start = nbrs.trailing_zeros() as usize;
        let mut visited = 1u16 << start;
        let mut frontier = 1u16 << start;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[u] & nbrs & !visited;
            }
            visited |= next;
            frontier = next;
        }
        if visited != nbrs {
            return false;
        }
    }
    // connectivity of the whole graph
    let mut visited = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u] & !visited;
        }
        visited |= next;
        frontier = next;
    }
    visited.count_ones() == n as u32
}

fn record_up_to_iso(n: u8, mask: u32, slots: &[(u8, u8)], reps: &mut Vec<(Vec<u8>, Vec<u32>)>) {
    let adj = adjacency_bits(n, mask, slots);
    let mut key: Vec<u8> = adj.iter().map(|a| a.count_ones() as u8).collect();
    key.sort_unstable();
    if let Some(entry) = reps.iter_mut().find(|(k, _)| *k == key) {
        if entry
            .1
            .iter()
            .any(|&other| graphs_isomorphic(n, &adj, &adjacency_bits(n, other, slots)))
        {
            return;
        }
        entry.1.push(mask);
    } else {
        reps.push((key, vec![mask]));
    }
}

/// Backtracking isomorphism test for graphs on up to 8 vertices.
fn graphs_isomorphic(n: u8, a: &[u16], b: &[u16]) -> bool {
    let n = n as usize;
    let deg_a: Vec<u32> = a.iter().map(|x| x.count_ones()).collect();
    let deg_b: Vec<u32> = b.iter().map(|x| x.count_ones()).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn place(
        v: usize,
        n: usize,
        a: &[u16],
        b: &[u16],
        deg_a: &[u32],
        deg_b: &[u32],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == n {
            return true;
        }
        for target in 0..n {
            if used[target] || deg_a[v] != deg_b[target] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                let edge_a = a[v] & (1 << u) != 0;
                let edge_b = b[target] & (1 << map[u]) != 0;
                edge_a == edge_b
            });
            if consistent {
                map[v] = target;
                used[target] = true;
                if place(v + 1, n, a, b, deg_a, deg_b, map, used) {
                    return true;
                }
                used[target] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    place(0, n, a, b, &deg_a, &deg_b, &mut map, &mut used)
}

/// Lexicographically minimal edge mask over all vertex relabelings.
fn canonical_graph_mask(n: u8, mask: u32, slots: &[(u8, u8)]) -> u32 {
    let slot_index = |i: u8, j: u8| -> usize {
        let (i, j) = (i.min(j), i.max(j));
        slots.iter().position(|&s| s == (i, j)).unwrap()
    };
    let edges: Vec<(u8, u8)> = slots
        .iter()
        .enumerate()
        .filter(|&(s, _)| mask & (1 << s) != 0)
        .map(|(_, &e)| e)
        .collect();
    let mut best = u32::MAX;
    for perm in (0..n).permutations(n as usize) {
        let mut remapped = 0u32;
        for &(i, j) in &edges {
            remapped |= 1 << slot_index(perm[i as usize], perm[j as usize]);
        }
        best = best.min(remapped);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::is_homology_sphere;
    use crate::vectors::{f_to_h, h_to_gamma};

    fn h(c: &Complex) -> Vec<i64> {
        f_to_h(&c.f_vector().unwrap()).0
    }

    #[test]
    fn coxeter_a_examples() {
        let a3 = coxeter_complex(CoxeterType::A, 3).unwrap();
        assert_eq!(a3.f_vector().unwrap().0, vec![1, 6, 6]);
        assert_eq!(h(&a3), vec![1, 4, 1]);
        let a4 = coxeter_complex(CoxeterType::A, 4).unwrap();
        assert_eq!(h(&a4), vec![1, 11, 11, 1]);
        assert!(a4.is_flag().unwrap());
        assert!(is_homology_sphere(&a4).unwrap());
    }

    #[test]
    fn coxeter_b_examples() {
        let b2 = coxeter_complex(CoxeterType::B, 2).unwrap();
        assert_eq!(b2.f_vector().unwrap().0, vec![1, 8, 8]);
        assert_eq!(h(&b2), vec![1, 6, 1]);
        let b3 = coxeter_complex(CoxeterType::B, 3).unwrap();
        assert!(b3.is_flag().unwrap());
        assert!(is_homology_sphere(&b3).unwrap());
        assert!(coxeter_complex(CoxeterType::D, 3).is_err());
    }

    #[test]
    fn associahedron_examples() {
        let a3 = associahedron_complex(3).unwrap();
        assert_eq!(a3.f_vector().unwrap().0, vec![1, 5, 5]);
        assert_eq!(h(&a3), vec![1, 3, 1]);
        let a2 = associahedron_complex(2).unwrap();
        assert_eq!(h(&a2), vec![1, 1]);
        let a4 = associahedron_complex(4).unwrap();
        assert_eq!(h(&a4), vec![1, 6, 6, 1]);
        assert_eq!(a4.facets().len(), 14); // triangulations of the hexagon
        assert!(a4.is_flag().unwrap());
    }

    #[test]
    fn exceptional_table() {
        assert_eq!(
            exceptional_gamma(ExceptionalGroup::H3).unwrap().0,
            vec![1, 56]
        );
        assert_eq!(
            exceptional_gamma(ExceptionalGroup::E8).unwrap().0,
            vec![1, 881744, 23045856, 63613184, 17111296]
        );
        assert_eq!(
            exceptional_gamma(ExceptionalGroup::I2(6)).unwrap(),
            exceptional_gamma(ExceptionalGroup::G2).unwrap()
        );
        assert!(exceptional_gamma(ExceptionalGroup::I2(2)).is_err());
    }

    #[test]
    fn flag_two_spheres_up_to_six() {
        let spheres = enumerate_flag_2spheres(6).unwrap();
        assert_eq!(spheres.len(), 1);
        assert_eq!(spheres[0].f_vector().unwrap().0, vec![1, 6, 12, 8]);
    }

    #[test]
    fn flag_two_spheres_seven() {
        let spheres = enumerate_flag_2spheres(7).unwrap();
        let seven: Vec<&Complex> = spheres.iter().filter(|c| c.vertices().len() == 7).collect();
        assert!(!seven.is_empty());
        for c in seven {
            let gamma = h_to_gamma(&f_to_h(&c.f_vector().unwrap())).unwrap();
            assert_eq!(gamma.0, vec![1, 1]);
        }
    }

    #[test]
    fn isomorphism_dedup_works() {
        // octahedron under two labelings
        let a = adjacency_from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)]);
        let b = adjacency_from_edges(6, &[(2, 1), (2, 0), (2, 3), (2, 4), (5, 1), (5, 0), (5, 3), (5, 4), (1, 0), (0, 3), (3, 4), (4, 1)]);
        assert!(graphs_isomorphic(6, &a, &b));
        let path = adjacency_from_edges(3, &[(0, 1), (1, 2)]);
        let tri = adjacency_from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!graphs_isomorphic(3, &path, &tri));
    }

    fn adjacency_from_edges(n: u8, edges: &[(u8, u8)]) -> Vec<u16> {
        let mut adj = vec![0u16; n as usize];
        for &(i, j) in edges {
            adj[i as usize] |= 1 << j;
            adj[j as usize] |= 1 << i;
        }
        adj
    }
}
