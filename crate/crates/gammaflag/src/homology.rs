//! Reduced Betti numbers over the rationals, computed from exact ranks of
//! the augmented boundary matrices, and the link-wise homology-sphere test.
//!
//! Ranks use fraction-free (Bareiss) elimination in i128 with a big-integer
//! fallback on overflow, so every rank is exact. Torsion is invisible over
//! the rationals; that is a stated limitation, adequate for the desk-scale
//! complexes (joins and suspensions of polygons, subdivisions, small clique
//! complexes) this crate certifies.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{Complex, Face};
use crate::Result;

/// Reduced Betti numbers in degrees -1..=dim (length dim + 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector(pub Vec<i64>);

impl BettiVector {
    /// The reduced Betti vector of a sphere of the given dimension (>= -1):
    /// 1 in the top degree, 0 elsewhere.
    pub fn sphere(dim: i64) -> BettiVector {
        let mut v = vec![0i64; (dim + 2) as usize];
        *v.last_mut().unwrap() = 1;
        BettiVector(v)
    }
}

/// Reduced Betti numbers of `c` over the rationals.
pub fn betti(c: &Complex) -> Result<BettiVector> {
    Ok(betti_of_face_list(c.faces()?.iter()))
}

/// Betti numbers of an explicit downward-closed family (the empty face makes
/// the chain complex augmented, so the answer is reduced homology).
fn betti_of_face_list<'a>(faces: impl IntoIterator<Item = &'a Face>) -> BettiVector {
    let mut by_size: Vec<Vec<&Face>> = Vec::new();
    for f in faces {
        if by_size.len() <= f.len() {
            by_size.resize(f.len() + 1, Vec::new());
        }
        by_size[f.len()].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // rank of the boundary map from size-s chains to size-(s-1) chains
    let mut ranks = vec![0usize; by_size.len() + 1];
    for s in 1..by_size.len() {
        let index: BTreeMap<&Face, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let columns: Vec<Vec<(u32, i128)>> = by_size[s]
            .iter()
            .map(|f| {
                let mut col: Vec<(u32, i128)> = f
                    .boundary()
                    .enumerate()
                    .map(|(pos, sub)| (index[&sub] as u32, if pos % 2 == 0 { 1 } else { -1 }))
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        ranks[s] = matrix_rank(columns);
    }

    let v = (0..by_size.len())
        .map(|s| by_size[s].len() as i64 - ranks[s] as i64 - ranks[s + 1] as i64)
        .collect();
    BettiVector(v)
}

/// True iff every face link (including the empty face) has the rational
/// homology of a sphere of the complementary dimension.
///
/// Links are collected in one pass over face/subface pairs, then tested from
/// the facets down so failures reject cheaply.
pub fn is_homology_sphere(c: &Complex) -> Result<bool> {
    let dim = c.dim();
    let faces: Vec<&Face> = c.faces()?.iter().collect();
    let index: BTreeMap<&Face, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut links: Vec<Vec<Face>> = vec![Vec::new(); faces.len()];
    for g in &faces {
        let vs = g.vertices();
        for mask in 0u32..(1 << vs.len()) {
            let sub: Vec<u32> = vs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            let rest: Vec<u32> = vs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) == 0)
                .map(|(_, &v)| v)
                .collect();
            links[index[&Face::from_sorted(sub)]].push(Face::from_sorted(rest));
        }
    }
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(faces[i].len()));
    for i in order {
        let want = dim - faces[i].len() as i64;
        if betti_of_face_list(links[i].iter()) != BettiVector::sphere(want) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Euler characteristic (non-reduced) from the face counts.
pub fn euler_characteristic(c: &Complex) -> Result<i64> {
    let f = c.f_vector()?;
    Ok(f.0
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &x)| if i % 2 == 1 { x } else { -x })
        .sum())
}

/// Exact rank over the rationals of a sparse integer matrix given as columns
/// of (row, coefficient) pairs sorted by row.
///
/// Persistence-style reduction: each column is combined with the stored
/// column sharing its lowest row until its low entry is unique or the column
/// vanishes. Exact integer column combinations with gcd normalization keep
/// entries word-sized here; a big-integer path covers any overflow.
fn matrix_rank(columns: Vec<Vec<(u32, i128)>>) -> usize {
    match rank_reduce(columns.clone()) {
        Some(r) => r,
        None => rank_reduce_bigint(columns),
    }
}

fn normalize_i128(col: &mut Vec<(u32, i128)>) {
    let mut g: i128 = 0;
    for &(_, c) in col.iter() {
        g = gcd_i128(g, c.unsigned_abs() as i128);
    }
    if g > 1 {
        for entry in col.iter_mut() {
            entry.1 /= g;
        }
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// new = lead_other * col - lead_col * other (merged by row); the shared low
/// row cancels. Returns None on overflow.
fn combine_i128(
    col: &[(u32, i128)],
    other: &[(u32, i128)],
    lead_col: i128,
    lead_other: i128,
) -> Option<Vec<(u32, i128)>> {
    let mut out = Vec::with_capacity(col.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < other.len() {
        let take_col = j >= other.len() || (i < col.len() && col[i].0 < other[j].0);
        let take_other = i >= col.len() || (j < other.len() && other[j].0 < col[i].0);
        let (row, val) = if take_col {
            let e = col[i];
            i += 1;
            (e.0, lead_other.checked_mul(e.1)?)
        } else if take_other {
            let e = other[j];
            j += 1;
            (e.0, lead_col.checked_mul(e.1)?.checked_neg()?)
        } else {
            let (a, b) = (col[i], other[j]);
            i += 1;
            j += 1;
            (
                a.0,
                lead_other
                    .checked_mul(a.1)?
                    .checked_sub(lead_col.checked_mul(b.1)?)?,
            )
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    Some(out)
}

fn rank_reduce(mut columns: Vec<Vec<(u32, i128)>>) -> Option<usize> {
    let mut pivot_of_low: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    let mut rank = 0usize;
    for j in 0..columns.len() {
        loop {
            let Some(&(low, lead)) = columns[j].last() else {
                break;
            };
            match pivot_of_low.get(&low) {
                None => {
                    pivot_of_low.insert(low, j);
                    rank += 1;
                    break;
                }
                Some(&k) => {
                    let lead_k = columns[k].last().unwrap().1;
                    let mut next = combine_i128(&columns[j], &columns[k], lead, lead_k)?;
                    normalize_i128(&mut next);
                    columns[j] = next;
                }
            }
        }
    }
    Some(rank)
}

fn rank_reduce_bigint(columns: Vec<Vec<(u32, i128)>>) -> usize {
    let mut columns: Vec<Vec<(u32, BigInt)>> = columns
        .into_iter()
        .map(|col| col.into_iter().map(|(r, c)| (r, BigInt::from(c))).collect())
        .collect();
    let mut pivot_of_low: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    let mut rank = 0usize;
    for j in 0..columns.len() {
        loop {
            let Some((low, lead)) = columns[j].last().map(|(r, c)| (*r, c.clone())) else {
                break;
            };
            match pivot_of_low.get(&low) {
                None => {
                    pivot_of_low.insert(low, j);
                    rank += 1;
                    break;
                }
                Some(&k) => {
                    let lead_k = columns[k].last().unwrap().1.clone();
                    let mut out: Vec<(u32, BigInt)> = Vec::new();
                    let (col, other) = (&columns[j], &columns[k]);
                    let (mut i2, mut j2) = (0, 0);
                    while i2 < col.len() || j2 < other.len() {
                        let take_col =
                            j2 >= other.len() || (i2 < col.len() && col[i2].0 < other[j2].0);
                        let take_other =
                            i2 >= col.len() || (j2 < other.len() && other[j2].0 < col[i2].0);
                        let (row, val) = if take_col {
                            let e = &col[i2];
                            i2 += 1;
                            (e.0, &lead_k * &e.1)
                        } else if take_other {
                            let e = &other[j2];
                            j2 += 1;
                            (e.0, -(&lead * &e.1))
                        } else {
                            let (a, b) = (&col[i2], &other[j2]);
                            i2 += 1;
                            j2 += 1;
                            (a.0, &lead_k * &a.1 - &lead * &b.1)
                        };
                        if !val.is_zero() {
                            out.push((row, val));
                        }
                    }
                    columns[j] = out;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: Vec<Vec<i128>>) -> Vec<Vec<(u32, i128)>> {
        let cols = rows.first().map_or(0, Vec::len);
        (0..cols)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, r)| r[j] != 0)
                    .map(|(i, r)| (i as u32, r[j]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(matrix_rank(dense(vec![vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(matrix_rank(dense(vec![vec![1, 0], vec![0, 1]])), 2);
        assert_eq!(matrix_rank(dense(vec![vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(matrix_rank(vec![]), 0);
        assert_eq!(
            matrix_rank(dense(vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]])),
            2
        );
        // big-integer path agrees with the fast path (row3 = row1 + row2)
        let m = vec![
            vec![7, -3, 5, 2],
            vec![1, 9, -4, 6],
            vec![8, 6, 1, 8],
            vec![0, 2, 2, -5],
        ];
        assert_eq!(matrix_rank(dense(m.clone())), 3);
        assert_eq!(rank_reduce_bigint(dense(m)), 3);
    }

    #[test]
    fn betti_examples() {
        let oct = Complex::octahedral_sphere(3).unwrap();
        assert_eq!(betti(&oct).unwrap().0, vec![0, 0, 0, 1]);
        let pent = Complex::polygon(5).unwrap();
        assert_eq!(betti(&pent).unwrap().0, vec![0, 0, 1]);
        let two_points = Complex::from_facets([vec![1], vec![2]]).unwrap();
        assert_eq!(betti(&two_points).unwrap().0, vec![0, 1]);
        assert_eq!(betti(&Complex::empty()).unwrap().0, vec![1]);
        let solid = Complex::from_facets([vec![1, 2, 3]]).unwrap();
        assert_eq!(betti(&solid).unwrap().0, vec![0, 0, 0, 0]);
    }

    #[test]
    fn homology_sphere_examples() {
        for n in 3..=8 {
            assert!(is_homology_sphere(&Complex::polygon(n).unwrap()).unwrap());
        }
        let solid = Complex::from_facets([vec![1, 2, 3]]).unwrap();
        assert!(!is_homology_sphere(&solid).unwrap());
        let pent = Complex::polygon(5).unwrap();
        let (j, _) = pent.join(&pent).unwrap();
        assert!(is_homology_sphere(&j).unwrap());
        assert!(is_homology_sphere(&Complex::empty()).unwrap());
        // joins of spheres land in the sphere of summed dimension + 1
        assert_eq!(betti(&j).unwrap(), BettiVector::sphere(3));
    }

    #[test]
    fn euler_characteristic_matches_betti() {
        for c in [
            Complex::octahedral_sphere(2).unwrap(),
            Complex::octahedral_sphere(3).unwrap(),
            Complex::polygon(7).unwrap(),
            Complex::simplex_boundary(4).unwrap(),
            Complex::from_facets([vec![1, 2, 3], vec![3, 4]]).unwrap(),
        ] {
            let b = betti(&c).unwrap();
            // chi = 1 + sum_i (-1)^i b_i over reduced degrees >= 0
            let chi_from_betti: i64 = 1 + b
                .0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(s, &x)| if s % 2 == 1 { x } else { -x })
                .sum::<i64>();
            assert_eq!(euler_characteristic(&c).unwrap(), chi_from_betti);
        }
    }
}
