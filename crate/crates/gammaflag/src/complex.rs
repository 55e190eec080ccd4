//! Exact finite simplicial complexes over small integer vertex ids, with the
//! constructions used throughout: flagness, links, induced subcomplexes,
//! suspension, join, edge contraction and the standard spheres.

use std::collections::BTreeSet;
use std::fmt;

use crate::vectors::FVector;
use crate::{Error, Result};

pub type VertexId = u32;

/// Full face lists are kept up to this many faces; past it a complex stores
/// only facets and skeleton, and face-list queries report a budget error.
pub const DEFAULT_FACE_BUDGET: usize = 10_000_000;

/// A face: a duplicate-free, ascending list of vertex ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Face> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!(
                "duplicate vertex in face {:?}",
                vertices
            )));
        }
        Ok(Face(vertices))
    }

    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Face {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// All faces obtained by dropping one vertex.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Face(v)
        })
    }

    pub fn with(&self, v: VertexId) -> Face {
        let mut out = self.0.clone();
        match out.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => out.insert(pos, v),
        }
        Face(out)
    }

    pub fn without(&self, v: VertexId) -> Face {
        Face(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        out.sort_unstable();
        out.dedup();
        Face(out)
    }

    /// Set difference `self - other`, keeping order.
    pub fn minus(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

/// A finite simplicial complex: ordered vertex list, maximal faces, the
/// 1-skeleton, and (within budget) the full downward-closed face family.
#[derive(Clone, Debug)]
pub struct Complex {
    vertices: Vec<VertexId>,
    facets: Vec<Face>,
    edges: BTreeSet<(VertexId, VertexId)>,
    faces: Option<BTreeSet<Face>>,
    budget: usize,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl Complex {
    /// The complex `{∅}` of dimension -1.
    pub fn empty() -> Complex {
        Complex {
            vertices: vec![],
            facets: vec![Face::empty()],
            edges: BTreeSet::new(),
            faces: Some(BTreeSet::from([Face::empty()])),
            budget: DEFAULT_FACE_BUDGET,
        }
    }

    /// Downward closure of the given facets; non-maximal inputs are dropped.
    pub fn from_facets<I, V>(facets: I) -> Result<Complex>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<VertexId>>,
    {
        Self::from_facets_with_budget(facets, DEFAULT_FACE_BUDGET)
    }

    pub fn from_facets_with_budget<I, V>(facets: I, budget: usize) -> Result<Complex>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<VertexId>>,
    {
        let mut input: Vec<Face> = facets
            .into_iter()
            .map(|f| Face::new(f.into()))
            .collect::<Result<_>>()?;
        input.sort();
        input.dedup();
        let maximal: Vec<Face> = input
            .iter()
            .filter(|f| {
                !input
                    .iter()
                    .any(|g| g.len() > f.len() && f.is_subset_of(g))
            })
            .cloned()
            .collect();
        let maximal = if maximal.is_empty() {
            vec![Face::empty()]
        } else {
            maximal
        };

        let mut vertices: Vec<VertexId> = maximal
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        vertices.sort_unstable();
        vertices.dedup();

        let mut edges = BTreeSet::new();
        for f in &maximal {
            let vs = f.vertices();
            for i in 0..vs.len() {
                for j in (i + 1)..vs.len() {
                    edges.insert((vs[i], vs[j]));
                }
            }
        }

        // level-by-level closure, biggest faces first
        let mut faces: BTreeSet<Face> = BTreeSet::new();
        let mut frontier: BTreeSet<Face> = maximal.iter().cloned().collect();
        let mut within_budget = true;
        'closure: while let Some(f) = frontier.pop_first() {
            if faces.contains(&f) {
                continue;
            }
            for sub in f.boundary() {
                frontier.insert(sub);
            }
            faces.insert(f);
            if faces.len() > budget {
                within_budget = false;
                break 'closure;
            }
        }
        faces.insert(Face::empty());

        Ok(Complex {
            vertices,
            facets: maximal,
            edges,
            faces: if within_budget { Some(faces) } else { None },
            budget,
        })
    }

    /// Build from an explicit face family, validating downward closure.
    /// The empty face is supplied automatically.
    pub fn from_faces<I>(faces: I) -> Result<Complex>
    where
        I: IntoIterator<Item = Face>,
    {
        let mut set: BTreeSet<Face> = faces.into_iter().collect();
        set.insert(Face::empty());
        for f in &set {
            for sub in f.boundary() {
                if !set.contains(&sub) {
                    return Err(Error::Malformed(format!(
                        "face family not downward closed: {:?} present but {:?} missing",
                        f, sub
                    )));
                }
            }
        }
        Ok(Self::from_face_set(set, DEFAULT_FACE_BUDGET))
    }

    fn from_face_set(set: BTreeSet<Face>, budget: usize) -> Complex {
        let mut non_maximal: BTreeSet<&Face> = BTreeSet::new();
        let mut subs: Vec<Face> = Vec::new();
        for f in &set {
            subs.extend(f.boundary());
        }
        let subs: BTreeSet<Face> = subs.into_iter().collect();
        for f in &set {
            if subs.contains(f) {
                non_maximal.insert(f);
            }
        }
        let facets: Vec<Face> = set
            .iter()
            .filter(|f| !subs.contains(*f))
            .cloned()
            .collect();
        let vertices: Vec<VertexId> = set
            .iter()
            .filter(|f| f.len() == 1)
            .map(|f| f.vertices()[0])
            .collect();
        let edges: BTreeSet<(VertexId, VertexId)> = set
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f.vertices()[0], f.vertices()[1]))
            .collect();
        Complex {
            vertices,
            facets,
            edges,
            faces: Some(set),
            budget,
        }
    }

    /// The clique complex of a simple graph: faces are exactly the cliques.
    pub fn clique_complex(
        vertices: &[VertexId],
        edges: &[(VertexId, VertexId)],
    ) -> Result<Complex> {
        Self::clique_complex_with_budget(vertices, edges, DEFAULT_FACE_BUDGET)
    }

    pub fn clique_complex_with_budget(
        vertices: &[VertexId],
        edges: &[(VertexId, VertexId)],
        budget: usize,
    ) -> Result<Complex> {
        let mut verts = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let index_of = |v: VertexId| verts.binary_search(&v).ok();
        let n = verts.len();
        let mut adj = vec![vec![false; n]; n];
        let mut edge_set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Malformed(format!("loop edge at vertex {}", a)));
            }
            let (ia, ib) = match (index_of(a), index_of(b)) {
                (Some(x), Some(y)) => (x, y),
                _ => {
                    return Err(Error::Domain(format!(
                        "edge ({}, {}) uses a vertex not in the vertex list",
                        a, b
                    )))
                }
            };
            adj[ia][ib] = true;
            adj[ib][ia] = true;
            edge_set.insert((a.min(b), a.max(b)));
        }

        let mut faces: BTreeSet<Face> = BTreeSet::new();
        faces.insert(Face::empty());
        // grow cliques by their largest element
        let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while let Some(clique) = stack.pop() {
            if faces.len() >= budget {
                return Err(Error::Budget(format!(
                    "clique complex exceeds face budget {}",
                    budget
                )));
            }
            faces.insert(Face::from_sorted(
                clique.iter().map(|&i| verts[i]).collect(),
            ));
            let last = *clique.last().unwrap();
            for next in (last + 1)..n {
                if clique.iter().all(|&i| adj[i][next]) {
                    let mut bigger = clique.clone();
                    bigger.push(next);
                    stack.push(bigger);
                }
            }
        }
        Ok(Self::from_face_set(faces, budget))
    }

    /// Boundary of the d-dimensional cross-polytope: the clique complex of the
    /// complete d-partite graph with parts {1,2}, {3,4}, ..., antipodes paired.
    pub fn octahedral_sphere(d: u32) -> Result<Complex> {
        if d < 1 {
            return Err(Error::Domain("octahedral sphere needs d >= 1".into()));
        }
        let vertices: Vec<VertexId> = (1..=2 * d).collect();
        let mut edges = Vec::new();
        for i in 1..=2 * d {
            for j in (i + 1)..=2 * d {
                let antipodal = i.div_ceil(2) == j.div_ceil(2);
                if !antipodal {
                    edges.push((i, j));
                }
            }
        }
        Self::clique_complex(&vertices, &edges)
    }

    /// Boundary cycle of an n-gon on vertices 1..=n.
    pub fn polygon(n: u32) -> Result<Complex> {
        if n < 3 {
            return Err(Error::Domain("polygon needs n >= 3".into()));
        }
        let facets: Vec<Vec<VertexId>> = (1..=n)
            .map(|i| vec![i, if i == n { 1 } else { i + 1 }])
            .collect();
        Self::from_facets(facets)
    }

    /// All proper subsets of {1, ..., n}.
    pub fn simplex_boundary(n: u32) -> Result<Complex> {
        if n < 1 {
            return Err(Error::Domain("simplex boundary needs n >= 1".into()));
        }
        let all: Vec<VertexId> = (1..=n).collect();
        let facets: Vec<Vec<VertexId>> = (0..n as usize)
            .map(|skip| {
                all.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        Self::from_facets(facets)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn edges(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// dim = (size of largest face) - 1; the `{∅}` complex has dimension -1.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// The full face family, including the empty face.
    pub fn faces(&self) -> Result<&BTreeSet<Face>> {
        self.faces.as_ref().ok_or_else(|| {
            Error::Budget(format!(
                "face list not stored: complex exceeds face budget {}",
                self.budget
            ))
        })
    }

    pub fn face_count(&self) -> Result<usize> {
        Ok(self.faces()?.len())
    }

    pub fn contains(&self, f: &Face) -> bool {
        match &self.faces {
            Some(set) => set.contains(f),
            None => self.facets.iter().any(|g| f.is_subset_of(g)),
        }
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let faces = self.faces()?;
        let mut counts = vec![0i64; (self.dim() + 2) as usize];
        for f in faces {
            counts[f.len()] += 1;
        }
        Ok(FVector(counts))
    }

    /// True iff the complex equals the clique complex of its 1-skeleton.
    ///
    /// Checked incrementally: every clique of the skeleton must be a face, so
    /// the search extends faces only and exits on the first missing clique.
    pub fn is_flag(&self) -> Result<bool> {
        let faces = self.faces()?;
        let mut frontier: Vec<&Face> = faces.iter().filter(|f| f.len() == 2).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in frontier {
                let vs = f.vertices();
                let max = *vs.last().unwrap();
                for &v in &self.vertices {
                    if v <= max {
                        continue;
                    }
                    if vs.iter().all(|&u| self.has_edge(u, v)) {
                        let clique = f.with(v);
                        if !faces.contains(&clique) {
                            return Ok(false);
                        }
                        next.push(faces.get(&clique).unwrap());
                    }
                }
            }
            frontier = next;
        }
        Ok(true)
    }

    /// lk(f): all faces G disjoint from f with f ∪ G a face.
    pub fn link(&self, f: &Face) -> Result<Complex> {
        if !self.contains(f) {
            return Err(Error::Domain(format!("{:?} is not a face", f)));
        }
        let faces = self.faces()?;
        let link_faces: BTreeSet<Face> = faces
            .iter()
            .filter(|g| f.is_subset_of(g))
            .map(|g| g.minus(f))
            .collect();
        Ok(Self::from_face_set(link_faces, self.budget))
    }

    /// The induced subcomplex on the vertex set `a`.
    pub fn induced(&self, a: &[VertexId]) -> Result<Complex> {
        let mut keep: Vec<VertexId> = a.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            if !self.has_vertex(v) {
                return Err(Error::Domain(format!("unknown vertex {}", v)));
            }
        }
        let faces = self.faces()?;
        let sub: BTreeSet<Face> = faces
            .iter()
            .filter(|f| f.vertices().iter().all(|&v| keep.binary_search(&v).is_ok()))
            .cloned()
            .collect();
        Ok(Self::from_face_set(sub, self.budget))
    }

    /// antistar(v): the induced subcomplex on all vertices but `v`.
    pub fn antistar(&self, v: VertexId) -> Result<Complex> {
        if !self.has_vertex(v) {
            return Err(Error::Domain(format!("unknown vertex {}", v)));
        }
        let rest: Vec<VertexId> = self.vertices.iter().copied().filter(|&u| u != v).collect();
        self.induced(&rest)
    }

    /// Vertices in the interior of the antistar of `v`: the non-neighbors of `v`.
    pub fn interior_antistar_vertices(&self, v: VertexId) -> Result<Vec<VertexId>> {
        if !self.has_vertex(v) {
            return Err(Error::Domain(format!("unknown vertex {}", v)));
        }
        Ok(self
            .vertices
            .iter()
            .copied()
            .filter(|&u| u != v && !self.has_edge(u, v))
            .collect())
    }

    /// susp(Δ) on two fresh vertex ids, returned for provenance.
    pub fn suspension(&self) -> Result<(Complex, (VertexId, VertexId))> {
        let base = self.vertices.last().map_or(1, |&m| m + 1);
        let (a, b) = (base, base + 1);
        let mut facets: Vec<Vec<VertexId>> = Vec::new();
        for f in &self.facets {
            facets.push(f.with(a).vertices().to_vec());
            facets.push(f.with(b).vertices().to_vec());
        }
        let c = Self::from_facets_with_budget(facets, self.budget)?;
        Ok((c, (a, b)))
    }

    /// Join: all unions F1 ∪ F2 after relabeling `other` onto fresh ids.
    /// The relabeling map (old, new) is returned.
    pub fn join(&self, other: &Complex) -> Result<(Complex, Vec<(VertexId, VertexId)>)> {
        let base = self.vertices.last().map_or(1, |&m| m + 1);
        let map: Vec<(VertexId, VertexId)> = other
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, base + i as VertexId))
            .collect();
        let relabel = |v: VertexId| -> VertexId {
            let i = other.vertices.binary_search(&v).unwrap();
            base + i as VertexId
        };
        let mut facets: Vec<Vec<VertexId>> = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                let mut joined = f.vertices().to_vec();
                joined.extend(g.vertices().iter().map(|&v| relabel(v)));
                facets.push(joined);
            }
        }
        let c = Self::from_facets_with_budget(facets, self.budget)?;
        Ok((c, map))
    }

    /// Contraction of the edge {u, v}: Δ' = {F : u ∉ F} ∪ {(F∖{u})∪{v} : u ∈ F}.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<Complex> {
        if !self.has_edge(u, v) {
            return Err(Error::Domain(format!("{{{}, {}}} is not an edge", u, v)));
        }
        let faces = self.faces()?;
        let mut out: BTreeSet<Face> = BTreeSet::new();
        for f in faces {
            if f.contains(u) {
                out.insert(f.without(u).with(v));
            } else {
                out.insert(f.clone());
            }
        }
        Ok(Self::from_face_set(out, self.budget))
    }

    /// Whether {u, v} lies in an induced 4-cycle (v, u, v', u') with both
    /// diagonals absent. Enumerates non-neighbor pairs directly.
    pub fn has_induced_4cycle_through(&self, u: VertexId, v: VertexId) -> Result<bool> {
        if !self.has_edge(u, v) {
            return Err(Error::Domain(format!("{{{}, {}}} is not an edge", u, v)));
        }
        let non_u = self.interior_antistar_vertices(u)?;
        let non_v = self.interior_antistar_vertices(v)?;
        for &up in &non_u {
            if up == v {
                continue;
            }
            for &vp in &non_v {
                if vp == u || vp == up {
                    continue;
                }
                if self.has_edge(u, vp) && self.has_edge(vp, up) && self.has_edge(up, v) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &Complex) -> Vec<i64> {
        c.f_vector().unwrap().0
    }

    #[test]
    fn from_facets_examples() {
        let tri = Complex::from_facets([vec![1, 2], vec![2, 3], vec![3, 1]]).unwrap();
        assert_eq!(f(&tri), vec![1, 3, 3]);
        let point = Complex::from_facets([vec![1]]).unwrap();
        assert_eq!(f(&point), vec![1, 1]);
        let solid = Complex::from_facets([vec![1, 2, 3]]).unwrap();
        assert_eq!(f(&solid), vec![1, 3, 3, 1]);
        assert!(Complex::from_facets([vec![1, 1, 2]]).is_err());
    }

    #[test]
    fn facets_are_maximal() {
        let c = Complex::from_facets([vec![1, 2, 3], vec![1, 2], vec![4]]).unwrap();
        assert_eq!(c.facets().len(), 2);
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn clique_complex_examples() {
        let c4 = Complex::clique_complex(&[1, 2, 3, 4], &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(f(&c4), vec![1, 4, 4]);
        let k3 = Complex::clique_complex(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(f(&k3), vec![1, 3, 3, 1]);
        let oct = Complex::octahedral_sphere(3).unwrap();
        assert_eq!(f(&oct), vec![1, 6, 12, 8]);
    }

    #[test]
    fn flag_examples() {
        // the empty triangle is a size-3 minimal non-face
        let hollow = Complex::from_facets([vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert!(!hollow.is_flag().unwrap());
        let filled = Complex::from_facets([vec![1, 2, 3]]).unwrap();
        assert!(filled.is_flag().unwrap());
        for n in 4..=7 {
            assert!(Complex::polygon(n).unwrap().is_flag().unwrap());
        }
        assert!(!Complex::simplex_boundary(4).unwrap().is_flag().unwrap());
        for d in 1..=3 {
            assert!(Complex::octahedral_sphere(d).unwrap().is_flag().unwrap());
        }
    }

    #[test]
    fn link_examples() {
        let oct = Complex::octahedral_sphere(3).unwrap();
        let lk = oct.link(&Face::new(vec![1]).unwrap()).unwrap();
        assert_eq!(f(&lk), vec![1, 4, 4]);
        let hex = Complex::polygon(6).unwrap();
        let lk_edge = hex.link(&Face::new(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(f(&lk_edge), vec![1]);
        assert_eq!(hex.link(&Face::empty()).unwrap(), hex);
        assert!(hex.link(&Face::new(vec![1, 3]).unwrap()).is_err());
    }

    #[test]
    fn induced_examples() {
        let hex = Complex::polygon(6).unwrap();
        let path = hex.induced(&[1, 2, 3]).unwrap();
        assert_eq!(f(&path), vec![1, 3, 2]);
        let pent = Complex::polygon(5).unwrap();
        let anti = pent.antistar(1).unwrap();
        assert_eq!(f(&anti), vec![1, 4, 3]);
        assert_eq!(f(&hex.induced(&[]).unwrap()), vec![1]);
        assert!(hex.induced(&[9]).is_err());
    }

    #[test]
    fn interior_antistar_examples() {
        let oct = Complex::octahedral_sphere(3).unwrap();
        for &v in oct.vertices() {
            assert_eq!(oct.interior_antistar_vertices(v).unwrap().len(), 1);
        }
        let pent = Complex::polygon(5).unwrap();
        assert_eq!(pent.interior_antistar_vertices(1).unwrap(), vec![3, 4]);
        let tri = Complex::polygon(3).unwrap();
        assert!(tri.interior_antistar_vertices(2).unwrap().is_empty());
    }

    #[test]
    fn suspension_examples() {
        let c4 = Complex::polygon(4).unwrap();
        let (susp, (a, b)) = c4.suspension().unwrap();
        assert_eq!(f(&susp), vec![1, 6, 12, 8]);
        assert!(!susp.has_edge(a, b));
        let (s0, _) = Complex::empty().suspension().unwrap();
        assert_eq!(f(&s0), vec![1, 2]);
    }

    #[test]
    fn join_examples() {
        let two_points = Complex::from_facets([vec![1], vec![2]]).unwrap();
        let (square, _) = two_points.join(&two_points).unwrap();
        assert_eq!(f(&square), vec![1, 4, 4]);
        // f-polynomial multiplies
        let pent = Complex::polygon(5).unwrap();
        let (j, _) = pent.join(&pent).unwrap();
        assert_eq!(f(&j), vec![1, 10, 35, 50, 25]);
    }

    #[test]
    fn octahedral_is_iterated_join() {
        let s0 = Complex::from_facets([vec![1], vec![2]]).unwrap();
        let mut c = s0.clone();
        for d in 2..=3 {
            let (j, _) = c.join(&s0).unwrap();
            c = j;
            assert_eq!(
                f(&c),
                f(&Complex::octahedral_sphere(d).unwrap()),
                "d = {}",
                d
            );
        }
    }

    #[test]
    fn contract_examples() {
        let hex = Complex::polygon(6).unwrap();
        let c = hex.contract_edge(1, 2).unwrap();
        assert_eq!(f(&c), vec![1, 5, 5]);
        assert!(!c.has_vertex(1));
        let tri = Complex::polygon(3).unwrap();
        let seg = tri.contract_edge(1, 2).unwrap();
        assert_eq!(f(&seg), vec![1, 2, 1]);
        let oct = Complex::octahedral_sphere(3).unwrap();
        let contracted = oct.contract_edge(1, 3).unwrap();
        assert!(!contracted.is_flag().unwrap());
        assert!(hex.contract_edge(1, 4).is_err());
    }

    #[test]
    fn induced_4cycle_examples() {
        let hex = Complex::polygon(6).unwrap();
        assert!(!hex.has_induced_4cycle_through(1, 2).unwrap());
        let c4 = Complex::polygon(4).unwrap();
        assert!(c4.has_induced_4cycle_through(1, 2).unwrap());
        let oct = Complex::octahedral_sphere(3).unwrap();
        for &(u, v) in oct.edges().clone().iter() {
            assert!(oct.has_induced_4cycle_through(u, v).unwrap());
        }
    }

    #[test]
    fn standard_examples() {
        assert_eq!(f(&Complex::octahedral_sphere(2).unwrap()), vec![1, 4, 4]);
        assert_eq!(f(&Complex::polygon(5).unwrap()), vec![1, 5, 5]);
        assert_eq!(f(&Complex::simplex_boundary(4).unwrap()), vec![1, 4, 6, 4]);
        assert!(Complex::polygon(2).is_err());
        assert!(Complex::octahedral_sphere(0).is_err());
    }

    #[test]
    fn budget_degrades_to_facets() {
        let c = Complex::from_facets_with_budget([vec![1, 2, 3, 4]], 5).unwrap();
        assert!(c.f_vector().is_err());
        assert!(c.contains(&Face::new(vec![1, 3]).unwrap()));
        assert!(!c.contains(&Face::new(vec![1, 5]).unwrap()));
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn downward_closure_always_holds() {
        let c = Complex::from_facets([vec![2, 4, 6], vec![1, 2], vec![5]]).unwrap();
        let faces = c.faces().unwrap();
        for face in faces {
            for sub in face.boundary() {
                assert!(faces.contains(&sub));
            }
        }
        assert!(faces.contains(&Face::empty()));
        for &v in c.vertices() {
            assert!(faces.contains(&Face::new(vec![v]).unwrap()));
        }
    }
}
