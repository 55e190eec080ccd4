//! Complexes whose f-vectors realize gamma-vectors: the decorated-permutation
//! complex for type B with its A and D subcomplexes, the noncrossing-arc
//! complex for the associahedron, and the ordered-pair complex for the
//! cyclohedron, together with the structure maps between faces and the
//! combinatorial families they count.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::complex::{Complex, Face, VertexId};
use crate::permstats::{
    self, split_down_up, DecPerm, PairTableau, Perm,
};
use crate::{Error, Result};

/// A one-bar decorated permutation: increasing prefix, bar, then a down-up
/// block split into its decreasing and increasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarVertex {
    word: Vec<u8>,
    bar: usize,
    dec_len: usize,
    color: u8,
}

impl PartialOrd for BarVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BarVertex {
    /// Canonical vertex order: bar position, then word, then color.
    fn cmp(&self, other: &Self) -> Ordering {
        self.bar
            .cmp(&other.bar)
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.color.cmp(&other.color))
    }
}

impl BarVertex {
    pub fn from_decperm(dp: &DecPerm) -> Result<BarVertex> {
        if dp.pk() != 1 {
            return Err(Error::Precondition(format!(
                "vertex needs exactly one bar, got {}",
                dp.pk()
            )));
        }
        let (bar, color) = dp.bars()[0];
        let word = dp.word().word().to_vec();
        let (dec, _inc) = split_down_up(&word[bar..], true)
            .expect("block after the bar of a valid decorated permutation is down-up");
        Ok(BarVertex {
            word,
            bar,
            dec_len: dec.len(),
            color,
        })
    }

    /// Parse a rendering like "2348|1 76519".
    pub fn parse(text: &str) -> Result<BarVertex> {
        let dp = parse_decperm(text)?;
        Self::from_decperm(&dp)
    }

    fn from_parts(prefix: &[u8], dec: &[u8], inc: &[u8], color: u8) -> BarVertex {
        let mut word = prefix.to_vec();
        word.extend_from_slice(dec);
        word.extend_from_slice(inc);
        BarVertex {
            word,
            bar: prefix.len(),
            dec_len: dec.len(),
            color,
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn bar_pos(&self) -> usize {
        self.bar
    }

    pub fn color(&self) -> u8 {
        self.color
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// The increasing prefix before the bar.
    pub fn prefix(&self) -> &[u8] {
        &self.word[..self.bar]
    }

    /// The decreasing part after the bar.
    pub fn dec(&self) -> &[u8] {
        &self.word[self.bar..self.bar + self.dec_len]
    }

    /// The increasing part after the decreasing part.
    pub fn inc(&self) -> &[u8] {
        &self.word[self.bar + self.dec_len..]
    }

    pub fn to_decperm(&self) -> DecPerm {
        let perm = Perm::new(self.word.clone()).expect("vertex word is a permutation");
        DecPerm::new(perm, vec![self.color]).expect("vertex bar sits at the unique peak")
    }

    pub fn render(&self) -> String {
        self.to_decperm().render()
    }
}

fn parse_decperm(text: &str) -> Result<DecPerm> {
    let mut word = Vec::new();
    let mut colors = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '0'..='9' => word.push(ch.to_digit(10).unwrap() as u8),
            '|' => {
                let c = chars
                    .next()
                    .and_then(|c| c.to_digit(10))
                    .ok_or_else(|| Error::Malformed(format!("bar without color in {:?}", text)))?;
                colors.push(c as u8);
            }
            ' ' => {}
            _ => {
                return Err(Error::Malformed(format!(
                    "unexpected character {:?} in {:?}",
                    ch, text
                )))
            }
        }
    }
    DecPerm::new(Perm::new(word)?, colors)
}

fn sorted_intersection(sorted_a: &[u8], sorted_b: &[u8]) -> Vec<u8> {
    sorted_a
        .iter()
        .copied()
        .filter(|v| sorted_b.binary_search(v).is_ok())
        .collect()
}

/// Assemble the witness for adjacency of two vertices: the decorated
/// permutation u.prefix |^c u.dec a |^d v.dec v.inc with `a` the letters of
/// u.inc ∩ v.prefix ascending. Returns it when it is a valid decorated
/// permutation whose image under phi is exactly {u, v}; adjacency holds
/// precisely then.
pub fn assemble(u: &BarVertex, v: &BarVertex) -> Result<Option<DecPerm>> {
    if u.n() != v.n() {
        return Err(Error::Domain(format!(
            "vertices live on different ground sets ({} vs {})",
            u.n(),
            v.n()
        )));
    }
    let (u, v) = match u.bar_pos().cmp(&v.bar_pos()) {
        Ordering::Less => (u, v),
        Ordering::Greater => (v, u),
        Ordering::Equal => return Ok(None),
    };
    let a = sorted_intersection(u.inc(), v.prefix());
    let mut word = u.prefix().to_vec();
    word.extend_from_slice(u.dec());
    word.extend_from_slice(&a);
    word.extend_from_slice(v.dec());
    word.extend_from_slice(v.inc());
    let Ok(perm) = Perm::new(word) else {
        return Ok(None);
    };
    let expected_bars = vec![u.bar_pos(), u.bar_pos() + u.dec().len() + a.len()];
    if perm.peak_set_0() != expected_bars {
        return Ok(None);
    }
    let dp = DecPerm::new(perm, vec![u.color(), v.color()])?;
    let image = phi(&dp);
    if image.iter().eq([u, v]) {
        Ok(Some(dp))
    } else {
        Ok(None)
    }
}

/// Adjacency in the decorated-permutation complex.
pub fn adjacent_des(u: &BarVertex, v: &BarVertex) -> Result<bool> {
    Ok(assemble(u, v)?.is_some())
}

/// The three set conditions as literally stated for adjacency. They are
/// necessary but not sufficient: see `assemble` for the normative test and
/// the tests below for witnesses where these accept a non-adjacent pair.
pub fn adjacent_des_bullets(u: &BarVertex, v: &BarVertex) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::Domain(format!(
            "vertices live on different ground sets ({} vs {})",
            u.n(),
            v.n()
        )));
    }
    let (u, v) = match u.bar_pos().cmp(&v.bar_pos()) {
        Ordering::Less => (u, v),
        Ordering::Greater => (v, u),
        Ordering::Equal => return Ok(false),
    };
    let prefix_and_dec_covered = u
        .prefix()
        .iter()
        .chain(u.dec())
        .all(|x| v.prefix().binary_search(x).is_ok());
    if !prefix_and_dec_covered {
        return Ok(false);
    }
    let a = sorted_intersection(u.inc(), v.prefix());
    let Some((&a_min, &a_max)) = a.first().zip(a.last()) else {
        return Ok(false);
    };
    let below_dec = u.dec().last().is_none_or(|&dec_min| a_min < dec_min);
    let above_vdec = v.dec().first().is_none_or(|&dec_max| a_max > dec_max);
    Ok(below_dec && above_vdec)
}

/// One vertex per bar: the bar keeps its position and color, its decreasing
/// part is retained verbatim, and everything to the left and right is sorted
/// ascending.
pub fn phi(dp: &DecPerm) -> BTreeSet<BarVertex> {
    let w = dp.word().word();
    let bars = dp.bars();
    let mut out = BTreeSet::new();
    for (k, &(pos, color)) in bars.iter().enumerate() {
        let block_end = bars.get(k + 1).map_or(w.len(), |&(p, _)| p);
        let is_last = k + 1 == bars.len();
        let (dec, _inc) = split_down_up(&w[pos..block_end], is_last)
            .expect("blocks of a valid decorated permutation are down-up");
        let mut prefix: Vec<u8> = w[..pos].to_vec();
        prefix.sort_unstable();
        let mut rest: Vec<u8> = w[pos + dec.len()..].to_vec();
        rest.sort_unstable();
        out.insert(BarVertex::from_parts(&prefix, &dec, &rest, color));
    }
    out
}

/// Inverse of `phi`: reassemble a pairwise-adjacent set of vertices into the
/// decorated permutation it is the image of.
pub fn phi_inverse(face: &BTreeSet<BarVertex>, n: u8) -> Result<DecPerm> {
    if face.is_empty() {
        return Ok(DecPerm::ascending(n));
    }
    for u in face {
        if u.n() != n as usize {
            return Err(Error::Domain(format!(
                "vertex on {} letters in a face over [{}]",
                u.n(),
                n
            )));
        }
        for v in face.iter().filter(|v| *v > u) {
            if assemble(u, v)?.is_none() {
                return Err(Error::Precondition(format!(
                    "face is not a clique: {} and {} are not adjacent",
                    u.render(),
                    v.render()
                )));
            }
        }
    }
    let mut vertices = face.iter();
    let mut running = vertices.next().unwrap().to_decperm();
    for v in vertices {
        running = extend_right(&running, v)?;
    }
    if phi(&running) != *face {
        return Err(Error::Precondition(
            "assembled decorated permutation does not map back onto the face".into(),
        ));
    }
    Ok(running)
}

/// Append one more bar (with larger position) to a decorated permutation.
fn extend_right(running: &DecPerm, v: &BarVertex) -> Result<DecPerm> {
    let w = running.word().word();
    let bars = running.bars();
    let last_block_start = bars.last().map_or(0, |&(p, _)| p);
    let (dec, inc) = split_down_up(&w[last_block_start..], true)
        .expect("last block of a valid decorated permutation is down-up");
    let a = sorted_intersection(&inc, v.prefix());
    let mut word = w[..last_block_start + dec.len()].to_vec();
    word.extend_from_slice(&a);
    word.extend_from_slice(v.dec());
    word.extend_from_slice(v.inc());
    let mut colors: Vec<u8> = running.colors().to_vec();
    colors.push(v.color());
    DecPerm::new(Perm::new(word)?, colors)
        .map_err(|e| Error::Precondition(format!("vertices do not assemble: {}", e)))
}

/// Remove one bar and reorder the two merged blocks as a down-up word:
/// the cover relation of the graded poset of decorated permutations.
pub fn coarsen(dp: &DecPerm, bar_index: usize) -> Result<DecPerm> {
    let bars = dp.bars();
    if bar_index >= bars.len() {
        return Err(Error::Domain(format!(
            "bar index {} out of range (word has {} bars)",
            bar_index,
            bars.len()
        )));
    }
    let blocks = dp.blocks();
    let left = blocks[bar_index];
    let right = blocks[bar_index + 1];
    let (dec, inc) = split_down_up(left, false).expect("interior blocks are down-up");
    let mut merged: Vec<u8> = inc;
    merged.extend_from_slice(right);
    merged.sort_unstable();
    let mut word: Vec<u8> = blocks[..bar_index].concat();
    word.extend_from_slice(&dec);
    word.extend_from_slice(&merged);
    for block in &blocks[bar_index + 2..] {
        word.extend_from_slice(block);
    }
    let mut colors: Vec<u8> = dp.colors().to_vec();
    colors.remove(bar_index);
    DecPerm::new(Perm::new(word)?, colors)
}

/// Exhaustively confirm that phi is a rank-preserving isomorphism of graded
/// posets from decorated permutations (ordered by bar removal) onto the face
/// poset of the type-B gamma-complex (n <= 5).
pub fn verify_poset_iso(n: u8) -> Result<bool> {
    if n > 5 {
        return Err(Error::Budget(format!(
            "verify_poset_iso supports n <= 5, got {}",
            n
        )));
    }
    let all = permstats::enumerate_decorated(n)?;
    let built = build_gamma_complex(Family::B, n)?;

    // phi is a grading-preserving bijection onto the faces
    let mut images: BTreeSet<Vec<BarVertex>> = BTreeSet::new();
    for dp in &all {
        let img = phi(dp);
        if img.len() != dp.pk() {
            return Ok(false);
        }
        if !images.insert(img.iter().cloned().collect()) {
            return Ok(false); // not injective
        }
    }
    if images.len() != built.complex.face_count()? {
        return Ok(false);
    }
    let faces_as_vertex_sets: BTreeSet<Vec<BarVertex>> = built
        .complex
        .faces()?
        .iter()
        .map(|f| {
            f.vertices()
                .iter()
                .map(|&id| built.vertex_objects[id as usize].clone())
                .collect()
        })
        .collect();
    if images != faces_as_vertex_sets {
        return Ok(false);
    }

    // covers correspond: removing bar i removes exactly the i-th vertex
    for dp in &all {
        let img = phi(dp);
        for i in 0..dp.pk() {
            let coarser = coarsen(dp, i)?;
            let coarser_img = phi(&coarser);
            if coarser_img.len() + 1 != img.len() || !coarser_img.is_subset(&img) {
                return Ok(false);
            }
        }
        // round-trip through the inverse
        if phi_inverse(&img, n)? != *dp {
            return Ok(false);
        }
    }

    // at this scale the face family coincides with the clique complex of the
    // adjacency graph (pairwise adjacency first under-determines faces at n = 7)
    let vertices = built.bar_vertices();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            if adjacent_des(&vertices[i], &vertices[j])? {
                edges.push((i as VertexId, j as VertexId));
            }
        }
    }
    let ids: Vec<VertexId> = (0..vertices.len() as VertexId).collect();
    let cliques = Complex::clique_complex(&ids, &edges)?;
    Ok(cliques == built.complex)
}

/// A vertex of the associahedron gamma-complex: a pair (a, b), 1 <= a < b <= n-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcVertex {
    pub a: u8,
    pub b: u8,
}

impl ArcVertex {
    pub fn new(a: u8, b: u8) -> Result<ArcVertex> {
        if a == 0 || a >= b {
            return Err(Error::Malformed(format!("arc ({}, {}) needs 1 <= a < b", a, b)));
        }
        Ok(ArcVertex { a, b })
    }

    pub fn render(&self) -> String {
        format!("({},{})", self.a, self.b)
    }
}

/// Pairs are crossing iff interleaved: a < c < b < d or c < a < d < b.
/// Pairs sharing an element are noncrossing (but still not adjacent).
pub fn noncrossing(p: ArcVertex, q: ArcVertex) -> bool {
    let crossing =
        (p.a < q.a && q.a < p.b && p.b < q.b) || (q.a < p.a && p.a < q.b && q.b < p.b);
    !crossing
}

/// Adjacency in the associahedron complex: noncrossing with disjoint supports.
pub fn arc_adjacent(p: ArcVertex, q: ArcVertex) -> bool {
    let disjoint = p.a != q.a && p.a != q.b && p.b != q.a && p.b != q.b;
    disjoint && noncrossing(p, q)
}

/// Descent pairs of a 312-avoiding no-double-descent permutation, as arcs.
pub fn pi(w: &Perm) -> Result<BTreeSet<ArcVertex>> {
    Ok(permstats::descent_pairs(w)?
        .into_iter()
        .map(|(a, b)| ArcVertex { a, b })
        .collect())
}

/// Rebuild the permutation from a pairwise-adjacent arc set: sort by upper
/// entry, place each descent pair, and fill the gaps ascending.
pub fn pi_inverse(face: &BTreeSet<ArcVertex>, n: u8) -> Result<Perm> {
    let mut arcs: Vec<ArcVertex> = face.iter().copied().collect();
    for (i, &p) in arcs.iter().enumerate() {
        if p.b > n - 1 {
            return Err(Error::Domain(format!("arc {} outside [1, {}]", p.render(), n - 1)));
        }
        for &q in &arcs[i + 1..] {
            if !arc_adjacent(p, q) {
                return Err(Error::Precondition(format!(
                    "arcs {} and {} are not adjacent",
                    p.render(),
                    q.render()
                )));
            }
        }
    }
    arcs.sort_by_key(|p| p.b);
    let used: BTreeSet<u8> = arcs.iter().flat_map(|p| [p.a, p.b]).collect();
    let mut word: Vec<u8> = Vec::with_capacity(n as usize);
    let mut prev_b = 0u8;
    for &arc in &arcs {
        word.extend((prev_b + 1..arc.b).filter(|v| !used.contains(v)));
        word.push(arc.b);
        word.push(arc.a);
        prev_b = arc.b;
    }
    word.extend((prev_b + 1..=n).filter(|v| !used.contains(v)));
    let perm = Perm::new(word)?;
    debug_assert!(perm.is_pk_member() && perm.is_312_avoiding());
    Ok(perm)
}

/// A vertex of the cyclohedron gamma-complex: (l, r) with l != r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LRVertex {
    pub l: u8,
    pub r: u8,
}

impl LRVertex {
    pub fn new(l: u8, r: u8) -> Result<LRVertex> {
        if l == r {
            return Err(Error::Malformed(format!("pair ({}, {}) needs l != r", l, r)));
        }
        Ok(LRVertex { l, r })
    }

    pub fn render(&self) -> String {
        format!("({};{})", self.l, self.r)
    }
}

/// All four coordinates distinct, and the l-order agrees with the r-order.
pub fn lr_adjacent(p: LRVertex, q: LRVertex) -> bool {
    let distinct = p.l != q.l && p.l != q.r && p.r != q.l && p.r != q.r;
    distinct && ((p.l < q.l) == (p.r < q.r))
}

/// The rows of the sorted two-column array.
pub fn psi(sigma: &PairTableau) -> BTreeSet<LRVertex> {
    sigma
        .rows()
        .into_iter()
        .map(|(l, r)| LRVertex { l, r })
        .collect()
}

/// Inverse of psi: adjacency makes the l- and r-orders agree, so sorting by
/// l recovers the columns.
pub fn psi_inverse(face: &BTreeSet<LRVertex>) -> Result<PairTableau> {
    let rows: Vec<LRVertex> = face.iter().copied().collect();
    for (i, &p) in rows.iter().enumerate() {
        for &q in &rows[i + 1..] {
            if !lr_adjacent(p, q) {
                return Err(Error::Precondition(format!(
                    "pairs {} and {} are not adjacent",
                    p.render(),
                    q.render()
                )));
            }
        }
    }
    PairTableau::new(
        rows.iter().map(|p| p.l).collect(),
        rows.iter().map(|p| p.r).collect(),
    )
}

/// The balanced coloring of the decorated-permutation complexes: a vertex
/// with its bar at position i gets color ceil(i / 2).
pub fn balanced_coloring(v: &BarVertex) -> u32 {
    (v.bar_pos() as u32).div_ceil(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    D,
    Assoc,
    Cyc,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            "assoc" => Ok(Family::Assoc),
            "cyc" => Ok(Family::Cyc),
            _ => Err(Error::Domain(format!("unknown family {:?}", s))),
        }
    }

    fn max_n(&self) -> u8 {
        match self {
            Family::A | Family::Assoc | Family::Cyc => 8,
            Family::B | Family::D => 6,
        }
    }
}

/// A gamma-complex together with printable labels for its vertex ids.
pub struct BuiltComplex {
    pub complex: Complex,
    pub labels: Vec<String>,
    vertex_objects: Vec<BarVertex>,
}

impl BuiltComplex {
    /// The underlying decorated-permutation vertices (A/B/D families only).
    pub fn bar_vertices(&self) -> &[BarVertex] {
        &self.vertex_objects
    }
}

/// Vertices of the type-A subcomplex: zero-colored one-bar vertices with an
/// empty decreasing part (ascending prefix and ascending tail). Generated
/// directly so the A family reaches n = 8.
fn type_a_vertices(n: u8) -> Vec<BarVertex> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) - 1 {
        let prefix: Vec<u8> = (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
        let tail: Vec<u8> = (1..=n).filter(|&v| mask & (1 << (v - 1)) == 0).collect();
        // one peak at the junction and none later: tail ascending already;
        // a single-letter tail would make the block strictly decreasing
        if tail.len() >= 2 && prefix.last().unwrap() > &tail[0] {
            out.push(BarVertex::from_parts(&prefix, &[], &tail, 0));
        }
    }
    out
}

/// The type-B complex built with the literal bullet conditions instead of
/// the normative adjacency. Exists to demonstrate that the bullets
/// over-accept: its face numbers exceed the type-B gamma-vector.
pub fn build_b_complex_with_bullets(n: u8) -> Result<Complex> {
    if n == 0 || n > 6 {
        return Err(Error::Budget(format!(
            "bullets complex supports 1 <= n <= 6, got {}",
            n
        )));
    }
    let mut vertices: Vec<BarVertex> = permstats::enumerate_one_bar(n)?
        .iter()
        .map(BarVertex::from_decperm)
        .collect::<Result<_>>()?;
    vertices.sort();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            if adjacent_des_bullets(&vertices[i], &vertices[j])? {
                edges.push((i as VertexId, j as VertexId));
            }
        }
    }
    let ids: Vec<VertexId> = (0..vertices.len() as VertexId).collect();
    Complex::clique_complex(&ids, &edges)
}

/// Build the flag complex of the family's vertex set under its adjacency.
pub fn build_gamma_complex(family: Family, n: u8) -> Result<BuiltComplex> {
    if n == 0 || n > family.max_n() {
        return Err(Error::Budget(format!(
            "family {:?} supports 1 <= n <= {}, got {}",
            family,
            family.max_n(),
            n
        )));
    }
    match family {
        Family::A | Family::B | Family::D => {
            // Faces are the phi-images of the family. Pairwise adjacency is
            // necessary but not sufficient for a vertex set to assemble (see
            // the tests for a pairwise-adjacent non-face at n = 7), so the
            // complex is built from the face family itself.
            let members: Vec<DecPerm> = match family {
                Family::A => permstats::enumerate_pk(n)?
                    .into_iter()
                    .map(|w| {
                        let bars = w.pk0();
                        DecPerm::new(w, vec![0; bars])
                    })
                    .collect::<Result<_>>()?,
                Family::B => permstats::enumerate_decorated(n)?,
                Family::D => permstats::enumerate_decorated(n)?
                    .into_iter()
                    .filter(permstats::is_type_d)
                    .collect(),
                _ => unreachable!(),
            };
            let mut vertices: Vec<BarVertex> = members
                .iter()
                .filter(|m| m.pk() == 1)
                .map(BarVertex::from_decperm)
                .collect::<Result<_>>()?;
            vertices.sort();
            let id_of = |v: &BarVertex| -> VertexId {
                vertices.binary_search(v).expect("face vertex enumerated") as VertexId
            };
            let faces: Vec<Face> = members
                .iter()
                .map(|m| Face::new(phi(m).iter().map(&id_of).collect()).expect("distinct vertices"))
                .collect();
            let complex = Complex::from_faces(faces)?;
            let labels = vertices.iter().map(BarVertex::render).collect();
            Ok(BuiltComplex {
                complex,
                labels,
                vertex_objects: vertices,
            })
        }
        Family::Assoc => {
            let mut vertices = Vec::new();
            for a in 1..n {
                for b in (a + 1)..n {
                    vertices.push(ArcVertex { a, b });
                }
            }
            let mut edges = Vec::new();
            for i in 0..vertices.len() {
                for j in (i + 1)..vertices.len() {
                    if arc_adjacent(vertices[i], vertices[j]) {
                        edges.push((i as VertexId, j as VertexId));
                    }
                }
            }
            let ids: Vec<VertexId> = (0..vertices.len() as VertexId).collect();
            let complex = Complex::clique_complex(&ids, &edges)?;
            Ok(BuiltComplex {
                complex,
                labels: vertices.iter().map(ArcVertex::render).collect(),
                vertex_objects: vec![],
            })
        }
        Family::Cyc => {
            let mut vertices = Vec::new();
            for l in 1..=n {
                for r in 1..=n {
                    if l != r {
                        vertices.push(LRVertex { l, r });
                    }
                }
            }
            let mut edges = Vec::new();
            for i in 0..vertices.len() {
                for j in (i + 1)..vertices.len() {
                    if lr_adjacent(vertices[i], vertices[j]) {
                        edges.push((i as VertexId, j as VertexId));
                    }
                }
            }
            let ids: Vec<VertexId> = (0..vertices.len() as VertexId).collect();
            let complex = Complex::clique_complex(&ids, &edges)?;
            Ok(BuiltComplex {
                complex,
                labels: vertices.iter().map(LRVertex::render).collect(),
                vertex_objects: vec![],
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertex(text: &str) -> BarVertex {
        BarVertex::parse(text).unwrap()
    }

    #[test]
    fn vertex_parsing_and_parts() {
        let v = vertex("2348|1 76519");
        assert_eq!(v.prefix(), &[2, 3, 4, 8]);
        assert_eq!(v.dec(), &[7, 6, 5]);
        assert_eq!(v.inc(), &[1, 9]);
        assert_eq!(v.color(), 1);
        assert_eq!(v.bar_pos(), 4);
        let u = vertex("4|0 12356789");
        assert_eq!(u.prefix(), &[4]);
        assert_eq!(u.dec(), &[] as &[u8]);
        assert_eq!(u.inc(), &[1, 2, 3, 5, 6, 7, 8, 9]);
        // strictly decreasing tail is all decreasing part
        let w = vertex("134|0 2");
        assert_eq!(w.dec(), &[2]);
        assert!(w.inc().is_empty());
    }

    #[test]
    fn adjacency_paper_example() {
        let u = vertex("4|0 12356789");
        let v = vertex("2348|1 76519");
        let dp = assemble(&u, &v).unwrap().unwrap();
        assert_eq!(dp.render(), "4|0 238|1 76519");
        assert!(adjacent_des(&u, &v).unwrap());
        assert!(adjacent_des(&v, &u).unwrap());
    }

    #[test]
    fn adjacency_rejects_same_position_and_mixed_n() {
        let u = vertex("3|0 124");
        let v = vertex("4|0 123");
        assert!(!adjacent_des(&u, &v).unwrap());
        let w = vertex("3|0 12");
        assert!(adjacent_des(&u, &w).is_err());
    }

    #[test]
    fn bullets_accept_but_validity_rejects() {
        // bar lands at a non-peak of the assembled word 3|1|24
        let u = vertex("3|0 124");
        let v = vertex("13|0 24");
        assert!(adjacent_des_bullets(&u, &v).unwrap());
        assert!(!adjacent_des(&u, &v).unwrap());
        // same failure with both decreasing parts nonempty: 4|32|1 has no
        // peak at position 3
        let u = vertex("4|0 312");
        let v = vertex("234|0 1");
        assert!(adjacent_des_bullets(&u, &v).unwrap());
        assert!(!adjacent_des(&u, &v).unwrap());
    }

    #[test]
    fn assembled_word_valid_but_image_differs() {
        // 652341 with bars at 1 and 5 is a valid decorated permutation, but
        // its phi-image contains 6|51234, not 6|52134
        let u = vertex("6|0 52134");
        let v = vertex("23456|0 1");
        assert!(!adjacent_des(&u, &v).unwrap());
    }

    #[test]
    fn phi_examples() {
        let dp = parse_decperm("4|0 238|1 76519").unwrap();
        let img = phi(&dp);
        let expect: BTreeSet<BarVertex> =
            [vertex("4|0 12356789"), vertex("2348|1 76519")].into();
        assert_eq!(img, expect);
        // one-bar element maps to itself
        let one = vertex("25|2 134");
        assert_eq!(phi(&one.to_decperm()), BTreeSet::from([one]));
        // barless word maps to the empty face
        assert!(phi(&DecPerm::ascending(6)).is_empty());
    }

    #[test]
    fn phi_inverse_examples() {
        let face: BTreeSet<BarVertex> =
            [vertex("4|0 12356789"), vertex("2348|1 76519")].into();
        let dp = phi_inverse(&face, 9).unwrap();
        assert_eq!(dp.render(), "4|0 238|1 76519");
        assert_eq!(phi_inverse(&BTreeSet::new(), 4).unwrap(), DecPerm::ascending(4));
        let single = BTreeSet::from([vertex("13|3 2")]);
        assert_eq!(phi_inverse(&single, 3).unwrap(), vertex("13|3 2").to_decperm());
        // non-clique input errors
        let bad: BTreeSet<BarVertex> = [vertex("3|0 124"), vertex("13|0 24")].into();
        assert!(phi_inverse(&bad, 4).is_err());
    }

    #[test]
    fn coarsen_examples() {
        let dp = parse_decperm("4|0 238|1 76519").unwrap();
        assert_eq!(coarsen(&dp, 1).unwrap().render(), "4|0 12356789");
        assert_eq!(coarsen(&dp, 0).unwrap().render(), "2348|1 76519");
        let one = vertex("25|2 134").to_decperm();
        assert_eq!(coarsen(&one, 0).unwrap(), DecPerm::ascending(5));
        assert!(coarsen(&one, 1).is_err());
    }

    #[test]
    fn poset_iso_small() {
        for n in 1..=4 {
            assert!(verify_poset_iso(n).unwrap(), "n = {}", n);
        }
        assert!(verify_poset_iso(6).is_err());
    }

    #[test]
    fn noncrossing_examples() {
        let arc = |a, b| ArcVertex::new(a, b).unwrap();
        assert!(!noncrossing(arc(1, 5), arc(4, 7)));
        assert!(noncrossing(arc(1, 5), arc(2, 4)));
        assert!(noncrossing(arc(1, 5), arc(6, 7)));
        // shared element: noncrossing but not adjacent
        assert!(noncrossing(arc(1, 2), arc(1, 3)));
        assert!(!arc_adjacent(arc(1, 2), arc(1, 3)));
        assert!(arc_adjacent(arc(1, 2), arc(3, 4)));
        assert!(arc_adjacent(arc(2, 3), arc(1, 4)));
    }

    #[test]
    fn pi_examples() {
        let w = Perm::new(vec![2, 1, 3]).unwrap();
        let img = pi(&w).unwrap();
        assert_eq!(img, BTreeSet::from([ArcVertex { a: 1, b: 2 }]));
        assert!(pi(&Perm::identity(5)).unwrap().is_empty());
        let face = BTreeSet::from([ArcVertex { a: 1, b: 2 }, ArcVertex { a: 3, b: 4 }]);
        let rebuilt = pi_inverse(&face, 5).unwrap();
        assert_eq!(rebuilt.word(), &[2, 1, 4, 3, 5]);
        assert_eq!(pi(&rebuilt).unwrap(), face);
        assert_eq!(pi_inverse(&BTreeSet::new(), 4).unwrap(), Perm::identity(4));
    }

    #[test]
    fn pi_roundtrip_exhaustive() {
        for n in 1..=6u8 {
            for w in permstats::enumerate_pk312(n).unwrap() {
                let face = pi(&w).unwrap();
                assert_eq!(face.len(), w.des());
                assert_eq!(pi_inverse(&face, n).unwrap(), w);
            }
        }
    }

    #[test]
    fn psi_examples() {
        let sigma = PairTableau::new(vec![1, 2], vec![3, 4]).unwrap();
        let img = psi(&sigma);
        assert_eq!(
            img,
            BTreeSet::from([LRVertex { l: 1, r: 3 }, LRVertex { l: 2, r: 4 }])
        );
        assert_eq!(psi_inverse(&img).unwrap(), sigma);
        let empty = PairTableau::new(vec![], vec![]).unwrap();
        assert!(psi(&empty).is_empty());
        let face = BTreeSet::from([LRVertex { l: 2, r: 1 }, LRVertex { l: 3, r: 4 }]);
        let sigma2 = psi_inverse(&face).unwrap();
        assert_eq!(sigma2.left(), &[2, 3]);
        assert_eq!(sigma2.right(), &[1, 4]);
    }

    #[test]
    fn psi_roundtrip_exhaustive() {
        for n in 1..=6u8 {
            for sigma in permstats::enumerate_pairs(n).unwrap() {
                let face = psi(&sigma);
                assert_eq!(face.len(), sigma.rho());
                assert_eq!(psi_inverse(&face).unwrap(), sigma);
            }
        }
    }

    #[test]
    fn balanced_coloring_examples() {
        assert_eq!(balanced_coloring(&vertex("4|0 12356789")), 1);
        assert_eq!(balanced_coloring(&vertex("2348|1 76519")), 2);
        let b2 = balanced_coloring(&vertex("13|0 24"));
        let b3 = balanced_coloring(&vertex("124|0 35"));
        assert_ne!(b2, b3);
    }

    #[test]
    fn build_small_families() {
        let cyc2 = build_gamma_complex(Family::Cyc, 2).unwrap();
        assert_eq!(cyc2.complex.f_vector().unwrap().0, vec![1, 2]);
        let assoc5 = build_gamma_complex(Family::Assoc, 5).unwrap();
        assert_eq!(assoc5.complex.f_vector().unwrap().0, vec![1, 6, 2]);
        let edge_labels: BTreeSet<Vec<&str>> = assoc5
            .complex
            .faces()
            .unwrap()
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| {
                f.vertices()
                    .iter()
                    .map(|&v| assoc5.labels[v as usize].as_str())
                    .collect()
            })
            .collect();
        assert_eq!(
            edge_labels,
            BTreeSet::from([vec!["(1,2)", "(3,4)"], vec!["(1,4)", "(2,3)"]])
        );
        let a5 = build_gamma_complex(Family::A, 5).unwrap();
        assert_eq!(a5.complex.f_vector().unwrap().0, vec![1, 22, 16]);
        assert!(build_gamma_complex(Family::B, 7).is_err());
    }

    #[test]
    fn built_complexes_are_flag_at_small_n() {
        for (family, n) in [
            (Family::A, 5),
            (Family::B, 4),
            (Family::D, 4),
            (Family::Assoc, 6),
            (Family::Cyc, 5),
        ] {
            let built = build_gamma_complex(family, n).unwrap();
            assert!(built.complex.is_flag().unwrap(), "{:?} n={}", family, n);
        }
    }

    #[test]
    fn type_a_vertex_characterization() {
        // zero-colored one-bar vertices with empty decreasing part
        for n in 2..=7u8 {
            let built = build_gamma_complex(Family::A, n).unwrap();
            let mut direct = type_a_vertices(n);
            direct.sort();
            assert_eq!(built.bar_vertices(), &direct[..], "n = {}", n);
        }
    }

    #[test]
    fn pairwise_adjacency_underdetermines_faces_at_seven() {
        // each pair assembles, the triple does not: 5|13|46|27 has no peak at 3
        let triple = [
            vertex("5|0 123467"),
            vertex("135|0 2467"),
            vertex("13456|0 27"),
        ];
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert!(adjacent_des(&triple[i], &triple[j]).unwrap());
            }
        }
        let face: BTreeSet<BarVertex> = triple.into();
        assert!(phi_inverse(&face, 7).is_err());
        // hence the realized complex stops being flag at n = 7
        let a7 = build_gamma_complex(Family::A, 7).unwrap();
        assert!(!a7.complex.is_flag().unwrap());
        for n in 2..=6u8 {
            let an = build_gamma_complex(Family::A, n).unwrap();
            assert!(an.complex.is_flag().unwrap(), "n = {}", n);
        }
    }
}
