//! f/h/gamma transforms and the inequality tests: Kruskal-Katona (shadow
//! form), Frankl-Furedi-Kalai (balanced complexes), and the dimension-3/4
//! bound 4*g2 <= g1^2.
//!
//! All binomial-type quantities are computed with exact big integers, so
//! vectors with eight-digit entries (the E8 row) go through without
//! overflow concerns.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::complex::{Complex, Face};
use crate::{Error, Result};

/// Face-count vector: entry `i` counts faces of cardinality `i`; `f_0 = 1`
/// stands for the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<i64>);

/// The h-vector, the standard binomial transform of the f-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<i64>);

/// Coefficients of a symmetric h-polynomial in the basis t^i (1+t)^(d-2i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector(pub Vec<i64>);

impl FVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl HVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// Dehn-Sommerville symmetry h_i = h_{d-i}.
    pub fn is_symmetric(&self) -> bool {
        let h = &self.0;
        (0..h.len()).all(|i| h[i] == h[h.len() - 1 - i])
    }
}

impl GammaVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// Coefficients of (1 + sign*t)^k.
fn binomial_poly(k: usize, sign: i64) -> Vec<i64> {
    let mut out = vec![0i64; k + 1];
    let mut c = 1i64;
    for (j, slot) in out.iter_mut().enumerate() {
        *slot = if sign < 0 && j % 2 == 1 { -c } else { c };
        c = c * (k as i64 - j as i64) / (j as i64 + 1);
    }
    out
}

/// h(t) = (1-t)^d f(t/(1-t)), expanded exactly: h(t) = sum_i f_i t^i (1-t)^(d-i).
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.0.len().saturating_sub(1);
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.0.iter().enumerate() {
        let term = binomial_poly(d - i, -1);
        for (j, &c) in term.iter().enumerate() {
            h[i + j] += fi * c;
        }
    }
    HVector(h)
}

/// Inverse transform: f(t) = (1+t)^d h(t/(1+t)), i.e. f_i = sum_j h_j C(d-j, i-j).
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.0.len().saturating_sub(1);
    let mut f = vec![0i64; d + 1];
    for (j, &hj) in h.0.iter().enumerate() {
        let term = binomial_poly(d - j, 1);
        for (k, &c) in term.iter().enumerate() {
            f[j + k] += hj * c;
        }
    }
    FVector(f)
}

/// Expand a symmetric h-vector in the basis t^i (1+t)^(d-2i).
///
/// The coefficients are extracted greedily from the lowest remaining term;
/// negative entries are returned as-is (they flag non-sphere input).
pub fn h_to_gamma(h: &HVector) -> Result<GammaVector> {
    if !h.is_symmetric() {
        return Err(Error::Precondition(
            "h-vector is not symmetric (Dehn-Sommerville fails): gamma undefined".into(),
        ));
    }
    let d = h.0.len() - 1;
    let mut rem = h.0.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let gi = rem[i];
        gamma.push(gi);
        let basis = binomial_poly(d - 2 * i, 1);
        for (j, &c) in basis.iter().enumerate() {
            rem[i + j] -= gi * c;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "symmetric expansion must be exact");
    Ok(GammaVector(gamma))
}

/// h(t) = sum_i gamma_i t^i (1+t)^(d-2i).
pub fn gamma_to_h(g: &GammaVector, d: usize) -> Result<HVector> {
    if g.0.len() > d / 2 + 1 {
        return Err(Error::Domain(format!(
            "gamma-vector of length {} does not fit degree {}",
            g.0.len(),
            d
        )));
    }
    let mut h = vec![0i64; d + 1];
    for (i, &gi) in g.0.iter().enumerate() {
        let basis = binomial_poly(d - 2 * i, 1);
        for (j, &c) in basis.iter().enumerate() {
            h[i + j] += gi * c;
        }
    }
    Ok(HVector(h))
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..k {
        num *= BigUint::from(n - j);
        den *= BigUint::from(j + 1);
    }
    num / den
}

/// The unique greedy binomial expansion of an integer at a fixed level:
/// a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j) with a_i > a_{i-1} > ... > a_j >= j >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cascade {
    terms: Vec<(u64, u32)>,
}

impl Cascade {
    /// Greedy expansion of `a` starting at `level`; `a = 0` gives the empty cascade.
    pub fn expand(a: u64, level: u32) -> Cascade {
        assert!(level >= 1, "cascade level must be >= 1");
        let mut terms = Vec::new();
        let mut rem = BigUint::from(a);
        let mut lvl = level;
        while !rem.is_zero() {
            debug_assert!(lvl >= 1);
            let top = max_binomial_arg(&rem, lvl);
            rem -= binomial(top, lvl as u64);
            terms.push((top, lvl));
            lvl -= 1;
        }
        let c = Cascade { terms };
        debug_assert!(c.terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(c.terms.last().is_none_or(|&(t, l)| t >= l as u64));
        c
    }

    /// The `(top, level)` pairs, levels strictly decreasing.
    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    /// Sum of C(a_s, s): reproduces the expanded integer.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(a, s)| binomial(a, s as u64))
            .sum()
    }

    /// Sum of C(a_s, s-1): the Kruskal-Katona shadow of the initial colex segment.
    pub fn shadow(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(a, s)| binomial(a, s as u64 - 1))
            .sum()
    }
}

/// Largest m with C(m, k) <= bound (bound >= 1).
fn max_binomial_arg(bound: &BigUint, k: u32) -> u64 {
    let k64 = k as u64;
    let mut hi = k64;
    while binomial(hi, k64) <= *bound {
        hi = hi.saturating_mul(2).max(hi + 1);
    }
    let mut lo = k64; // C(k, k) = 1 <= bound
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, k64) <= *bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Minimum possible number of (k-1)-subsets covered by m distinct k-sets.
pub fn kk_shadow_bound(m: u64, k: u32) -> BigUint {
    if m == 0 {
        return BigUint::zero();
    }
    Cascade::expand(m, k).shadow()
}

/// A failed inequality check, for reporting.
#[derive(Clone, Debug)]
pub struct Violation {
    /// Index into the vector where the first violation occurs.
    pub index: usize,
    pub reason: String,
}

/// First Kruskal-Katona violation of `v`, or `None` if `v` is the f-vector
/// of some simplicial complex.
pub fn kk_violation(v: &[i64]) -> Option<Violation> {
    if v.is_empty() || v[0] != 1 {
        return Some(Violation {
            index: 0,
            reason: "f_0 must equal 1".into(),
        });
    }
    if let Some(i) = v.iter().position(|&x| x < 0) {
        return Some(Violation {
            index: i,
            reason: format!("negative entry {}", v[i]),
        });
    }
    for i in 1..v.len().saturating_sub(1) {
        let bound = kk_shadow_bound(v[i + 1] as u64, (i + 1) as u32);
        if bound > BigUint::from(v[i] as u64) {
            return Some(Violation {
                index: i + 1,
                reason: format!(
                    "{} faces of size {} need at least {} of size {}, only {} present",
                    v[i + 1],
                    i + 1,
                    bound,
                    i,
                    v[i]
                ),
            });
        }
    }
    None
}

/// Kruskal-Katona test in the shadow form: true iff `v` is the f-vector of a
/// simplicial complex.
pub fn kk_check(v: &[i64]) -> bool {
    kk_violation(v).is_none()
}

/// First `m` k-subsets of {1, 2, ...} in colexicographic order.
fn first_colex_ksets(m: usize, k: usize) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![];
    }
    if k == 0 {
        return vec![vec![]];
    }
    let mut n = k as u64;
    while binomial(n, k as u64) < BigUint::from(m) {
        n += 1;
    }
    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut cur: Vec<u32> = (1..=k as u32).collect();
    loop {
        all.push(cur.clone());
        // next k-subset of 1..=n in lexicographic order
        let mut i = k;
        while i > 0 && cur[i - 1] == n as u32 - (k - i) as u32 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    all.truncate(m);
    all
}

/// Compressed-complex oracle for `kk_check`: take the first `v_i` i-subsets
/// of the naturals in colex order at every level and test downward closure.
/// Returns the realized complex, or `None` when the compressed family is not
/// closed (classically, exactly when `v` fails Kruskal-Katona).
pub fn kk_realize_compressed(v: &[i64]) -> Option<Complex> {
    if v.is_empty() || v[0] != 1 || v.iter().any(|&x| x < 0) {
        return None;
    }
    const REALIZE_CAP: i64 = 1 << 20;
    if v.iter().any(|&x| x > REALIZE_CAP) {
        return None;
    }
    let mut levels: Vec<Vec<Vec<u32>>> = vec![vec![vec![]]];
    for (k, &count) in v.iter().enumerate().skip(1) {
        levels.push(first_colex_ksets(count as usize, k));
    }
    // downward closure: every (k-1)-subset of a chosen k-set must be chosen
    for k in (2..levels.len()).rev() {
        let below: std::collections::BTreeSet<&Vec<u32>> = levels[k - 1].iter().collect();
        for face in &levels[k] {
            for drop in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(drop);
                if !below.contains(&sub) {
                    return None;
                }
            }
        }
    }
    let faces = levels
        .into_iter()
        .flatten()
        .map(|f| Face::new(f).expect("colex subsets are duplicate-free"));
    Some(Complex::from_faces(faces).expect("compressed family is downward closed"))
}

/// Number of k-cliques in the Turan graph on `a` vertices and `colors`
/// near-equal parts: the elementary symmetric polynomial e_k of the part sizes.
fn turan_count(a: u64, colors: u32, k: u32) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if k > colors {
        return BigUint::zero();
    }
    let q = a / colors as u64;
    let r = (a % colors as u64) as u32;
    // e_k via the coefficient of t^k in (1 + (q+1) t)^r (1 + q t)^(colors - r)
    let mut coeffs: Vec<BigUint> = vec![BigUint::one()];
    for (size, copies) in [(q + 1, r), (q, colors - r)] {
        for _ in 0..copies {
            let mut next = vec![BigUint::zero(); (coeffs.len() + 1).min(k as usize + 1)];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                if i + 1 < next.len() {
                    next[i + 1] += c * BigUint::from(size);
                }
            }
            coeffs = next;
        }
    }
    coeffs.get(k as usize).cloned().unwrap_or_else(BigUint::zero)
}

/// Largest a with turan_count(a, colors, k) <= bound (bound >= 1, k <= colors).
fn max_turan_arg(bound: &BigUint, colors: u32, k: u32) -> u64 {
    let mut hi = k as u64;
    while turan_count(hi, colors, k) <= *bound {
        hi = hi.saturating_mul(2).max(hi + 1);
    }
    let mut lo = k as u64; // k vertices in k distinct parts give one k-clique
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if turan_count(mid, colors, k) <= *bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Minimum number of (k-1)-faces of a balanced r-colorable complex with m
/// faces of size k: the colored analogue of the Kruskal-Katona shadow,
/// computed by the greedy multipartite cascade.
fn ffk_shadow_bound(m: u64, k: u32, r: u32) -> BigUint {
    debug_assert!(k >= 1 && r >= k);
    let mut total = BigUint::zero();
    let mut rem = BigUint::from(m);
    let mut level = k;
    let mut colors = r;
    while !rem.is_zero() {
        if level == 1 {
            // a fresh vertex contributes exactly itself one level down
            total += BigUint::one();
            break;
        }
        let a = max_turan_arg(&rem, colors, level);
        total += turan_count(a, colors, level - 1);
        rem -= turan_count(a, colors, level);
        level -= 1;
        colors -= 1;
    }
    total
}

/// First Frankl-Furedi-Kalai violation of `v` as the f-vector of an
/// r-colorable (balanced) complex.
pub fn ffk_violation(v: &[i64], r: u32) -> Result<Option<Violation>> {
    let needed = v
        .iter()
        .enumerate()
        .rev()
        .find(|&(_, &x)| x > 0)
        .map(|(i, _)| i)
        .unwrap_or(0);
    if (r as usize) < needed {
        return Err(Error::Precondition(format!(
            "{} colors cannot support faces of size {}",
            r, needed
        )));
    }
    if v.is_empty() || v[0] != 1 {
        return Ok(Some(Violation {
            index: 0,
            reason: "f_0 must equal 1".into(),
        }));
    }
    if let Some(i) = v.iter().position(|&x| x < 0) {
        return Ok(Some(Violation {
            index: i,
            reason: format!("negative entry {}", v[i]),
        }));
    }
    for i in 1..v.len().saturating_sub(1) {
        if v[i + 1] == 0 {
            continue;
        }
        let bound = ffk_shadow_bound(v[i + 1] as u64, (i + 1) as u32, r);
        if bound > BigUint::from(v[i] as u64) {
            return Ok(Some(Violation {
                index: i + 1,
                reason: format!(
                    "{} balanced faces of size {} need at least {} of size {}, only {} present",
                    v[i + 1],
                    i + 1,
                    bound,
                    i,
                    v[i]
                ),
            }));
        }
    }
    Ok(None)
}

/// Frankl-Furedi-Kalai test: true iff `v` is the f-vector of an r-colorable
/// balanced complex. Errors when `r` is smaller than the largest face size.
pub fn ffk_check(v: &[i64], r: u32) -> Result<bool> {
    Ok(ffk_violation(v, r)?.is_none())
}

/// Default color count for `ffk_check`: the largest index carrying a
/// positive entry (a (k-1)-dimensional complex needs k colors).
pub fn ffk_default_colors(v: &[i64]) -> u32 {
    v.iter()
        .enumerate()
        .rev()
        .find(|&(_, &x)| x > 0)
        .map(|(i, _)| i as u32)
        .unwrap_or(1)
        .max(1)
}

/// Exhaustive oracle for `ffk_check`: search all complexes on exactly `v_1`
/// vertices (up to `nmax`) with a proper r-coloring making every face
/// rainbow, realizing `v` exactly.
pub fn balanced_fvector_exists(v: &[i64], r: u32, nmax: u32) -> Result<bool> {
    if v.is_empty() || v[0] != 1 || v.iter().any(|&x| x < 0) {
        return Ok(false);
    }
    let n = if v.len() > 1 { v[1] } else { 0 } as u32;
    if n > nmax || nmax > 12 {
        return Err(Error::Budget(format!(
            "balanced search needs v_1 = {} <= nmax = {} <= 12",
            n, nmax
        )));
    }
    let top = v
        .iter()
        .enumerate()
        .rev()
        .find(|&(_, &x)| x > 0)
        .map(|(i, _)| i)
        .unwrap_or(0);
    if top <= 1 {
        return Ok(true); // isolated vertices realize any (1, v_1)
    }
    if top > r as usize {
        return Ok(false); // a rainbow face of size top needs top colors
    }
    let colorings = (r as u64).checked_pow(n).unwrap_or(u64::MAX);
    if colorings > 2_000_000 {
        return Err(Error::Budget("too many colorings to enumerate".into()));
    }
    let mut nodes: u64 = 0;
    let mut coloring = vec![0u32; n as usize];
    loop {
        let singletons: BTreeSet<Vec<u32>> = (0..n).map(|i| vec![i]).collect();
        if realize_exact(v, 2, top, &coloring, &singletons, &mut nodes)? {
            return Ok(true);
        }
        // next coloring in base r
        let mut i = 0;
        loop {
            if i == coloring.len() {
                return Ok(false);
            }
            coloring[i] += 1;
            if coloring[i] < r {
                break;
            }
            coloring[i] = 0;
            i += 1;
        }
    }
}

use std::collections::BTreeSet;

/// Pick exactly v[k] rainbow k-faces supported by the chosen (k-1)-faces,
/// recursing over the choice; at the top level any large-enough candidate
/// pool suffices because nothing sits above it.
fn realize_exact(
    v: &[i64],
    k: usize,
    top: usize,
    coloring: &[u32],
    chosen_prev: &BTreeSet<Vec<u32>>,
    nodes: &mut u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > 5_000_000 {
        return Err(Error::Budget("balanced realization search too large".into()));
    }
    let n = coloring.len() as u32;
    let mut candidates: Vec<Vec<u32>> = Vec::new();
    for face in chosen_prev {
        let last = *face.last().unwrap();
        'extend: for w in (last + 1)..n {
            if face.iter().any(|&u| coloring[u as usize] == coloring[w as usize]) {
                continue;
            }
            let mut bigger = face.clone();
            bigger.push(w);
            for drop in 0..bigger.len() - 1 {
                let mut sub = bigger.clone();
                sub.remove(drop);
                if !chosen_prev.contains(&sub) {
                    continue 'extend;
                }
            }
            candidates.push(bigger);
        }
    }
    let want = v.get(k).copied().unwrap_or(0) as usize;
    if k == top {
        return Ok(candidates.len() >= want);
    }
    if candidates.len() < want {
        return Ok(false);
    }
    let mut pick: Vec<usize> = (0..want).collect();
    loop {
        *nodes += 1;
        if *nodes > 5_000_000 {
            return Err(Error::Budget("balanced realization search too large".into()));
        }
        let chosen: BTreeSet<Vec<u32>> = pick.iter().map(|&i| candidates[i].clone()).collect();
        if realize_exact(v, k + 1, top, coloring, &chosen, nodes)? {
            return Ok(true);
        }
        // next want-combination of candidate indices
        let m = candidates.len();
        let mut i = pick.len();
        while i > 0 && pick[i - 1] == m - (pick.len() - i) - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(false);
        }
        pick[i - 1] += 1;
        for j in i..pick.len() {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// Gal's dimension-3/4 bound: 0 <= g_2 and 4 g_2 <= g_1^2.
///
/// Vectors shorter than 3 are padded with zeros; any negative entry fails.
pub fn gal_34_check(g: &[i64]) -> bool {
    let g1 = g.get(1).copied().unwrap_or(0);
    let g2 = g.get(2).copied().unwrap_or(0);
    if g.iter().any(|&x| x < 0) {
        return false;
    }
    4 * (g2 as i128) <= (g1 as i128) * (g1 as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_to_h_examples() {
        assert_eq!(f_to_h(&FVector(vec![1, 5, 5])).0, vec![1, 3, 1]);
        assert_eq!(f_to_h(&FVector(vec![1, 4, 6, 4])).0, vec![1, 1, 1, 1]);
        assert_eq!(f_to_h(&FVector(vec![1])).0, vec![1]);
    }

    #[test]
    fn h_to_gamma_examples() {
        assert_eq!(h_to_gamma(&HVector(vec![1, 3, 1])).unwrap().0, vec![1, 1]);
        assert_eq!(
            h_to_gamma(&HVector(vec![1, 11, 11, 1])).unwrap().0,
            vec![1, 8]
        );
        assert_eq!(h_to_gamma(&HVector(vec![1, 1])).unwrap().0, vec![1]);
        assert!(h_to_gamma(&HVector(vec![1, 2, 3])).is_err());
    }

    #[test]
    fn gamma_roundtrip() {
        let g = GammaVector(vec![1, 2, 1]);
        let h = gamma_to_h(&g, 4).unwrap();
        assert_eq!(h_to_gamma(&h).unwrap(), g);
    }

    #[test]
    fn cascade_examples() {
        assert_eq!(Cascade::expand(10, 3).terms(), &[(5, 3)]);
        // 4 = C(3,2) + C(1,1)
        assert_eq!(Cascade::expand(4, 2).terms(), &[(3, 2), (1, 1)]);
        assert!(Cascade::expand(0, 5).terms().is_empty());
        assert_eq!(Cascade::expand(2, 3).terms(), &[(3, 3), (2, 2)]);
    }

    #[test]
    fn shadow_bound_examples() {
        assert_eq!(kk_shadow_bound(2, 3), BigUint::from(5u32));
        assert_eq!(kk_shadow_bound(5, 2), BigUint::from(4u32));
        assert_eq!(kk_shadow_bound(0, 7), BigUint::zero());
    }

    /// independent oracle: minimum shadow by exhaustive search over families
    /// of m k-subsets of a ground set just large enough to be safe
    fn brute_min_shadow(m: usize, k: usize) -> usize {
        use itertools::Itertools;
        let mut ground = k as u64;
        while binomial(ground, k as u64) < BigUint::from(m) {
            ground += 1;
        }
        let ground = (ground as usize + k).min(9);
        let ksets: Vec<Vec<usize>> = (0..ground).combinations(k).collect();
        let mut best = usize::MAX;
        for family in ksets.iter().combinations(m) {
            let mut shadow = std::collections::BTreeSet::new();
            for f in &family {
                for d in 0..k {
                    let mut s = (*f).clone();
                    s.remove(d);
                    shadow.insert(s);
                }
            }
            best = best.min(shadow.len());
        }
        best
    }

    #[test]
    fn shadow_bound_matches_brute_force() {
        for m in 1..=6usize {
            for k in 2..=3usize {
                assert_eq!(
                    kk_shadow_bound(m as u64, k as u32),
                    BigUint::from(brute_min_shadow(m, k)),
                    "m={} k={}",
                    m,
                    k
                );
            }
        }
    }

    #[test]
    fn kk_examples() {
        assert!(kk_check(&[1, 4, 4, 1]));
        assert!(!kk_check(&[1, 4, 4, 2]));
        assert!(kk_check(&[1, 2632, 3856]));
        assert!(kk_check(&[1]));
        assert!(!kk_check(&[2, 1]));
        assert!(!kk_check(&[1, -1]));
        let v = kk_violation(&[1, 4, 4, 2]).unwrap();
        assert_eq!(v.index, 3);
    }

    #[test]
    fn compressed_realization() {
        let c = kk_realize_compressed(&[1, 3, 3, 1]).unwrap();
        assert_eq!(c.f_vector().unwrap().0, vec![1, 3, 3, 1]);
        assert!(kk_realize_compressed(&[1, 4, 4, 2]).is_none());
        let trivial = kk_realize_compressed(&[1]).unwrap();
        assert_eq!(trivial.f_vector().unwrap().0, vec![1]);
        let padded = kk_realize_compressed(&[1, 0]).unwrap();
        assert_eq!(padded.f_vector().unwrap().0, vec![1]);
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan_count(4, 2, 2), BigUint::from(4u32)); // K(2,2)
        assert_eq!(turan_count(5, 2, 2), BigUint::from(6u32)); // K(3,2)
        assert_eq!(turan_count(5, 3, 3), BigUint::from(4u32)); // parts 2,2,1
        assert_eq!(turan_count(6, 3, 1), BigUint::from(6u32));
        assert_eq!(turan_count(3, 3, 0), BigUint::one());
    }

    #[test]
    fn ffk_examples() {
        assert!(ffk_check(&[1, 4, 4], 2).unwrap());
        assert!(!ffk_check(&[1, 4, 5], 2).unwrap());
        assert!(ffk_check(&[1, 0, 0], 2).unwrap());
        assert!(ffk_check(&[1, 2, 1], 2).unwrap());
        assert!(ffk_violation(&[1, 2, 2, 1], 2).is_err());
        // bipartite bound f_2 <= f_1^2/4 is implied at r = 2
        for f1 in 0..=8i64 {
            for f2 in 0..=20i64 {
                if ffk_check(&[1, f1, f2], 2).unwrap() {
                    assert!(4 * f2 <= f1 * f1, "f1={} f2={}", f1, f2);
                }
            }
        }
    }

    #[test]
    fn balanced_oracle_examples() {
        assert!(balanced_fvector_exists(&[1, 4, 4], 2, 4).unwrap());
        assert!(!balanced_fvector_exists(&[1, 4, 5], 2, 6).unwrap());
        assert!(balanced_fvector_exists(&[1, 2, 1], 2, 2).unwrap());
        assert!(balanced_fvector_exists(&[1, 3, 3, 1], 3, 3).unwrap());
        assert!(!balanced_fvector_exists(&[1, 4, 6, 4], 3, 4).unwrap());
    }

    #[test]
    fn gal_examples() {
        assert!(gal_34_check(&[1, 2, 1]));
        assert!(!gal_34_check(&[1, 2, 2]));
        assert!(gal_34_check(&[1, 0, 0]));
        assert!(gal_34_check(&[1, 8]));
        assert!(!gal_34_check(&[1, -1, 0]));
    }
}
