//! Quivers: finite directed multigraphs with named vertices and arrows.
//!
//! Vertex and arrow identity is by name. Declaration order fixes the index
//! order used by every matrix layout downstream.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    connected: bool,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(arrow, tail, head)` triples.
    ///
    /// Fails on duplicate names or dangling incidences. Connectedness is recorded,
    /// not required; see [`Quiver::validate`].
    pub fn new<V, A, S1, S2, S3>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator<Item = S1>,
        A: IntoIterator<Item = (S2, S3, S3)>,
        S1: Into<String>,
        S2: Into<String>,
        S3: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateName { kind: "vertex", name: v.clone() });
            }
        }
        let mut out_arrows = Vec::new();
        let mut seen = HashMap::new();
        for (name, tail, head) in arrows {
            let name: String = name.into();
            let lookup = |v: &str| {
                index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::Unknown { kind: "vertex", name: v.to_string() })
            };
            let (t, h) = (lookup(tail.as_ref())?, lookup(head.as_ref())?);
            if seen.insert(name.clone(), ()).is_some() {
                return Err(Error::DuplicateName { kind: "arrow", name });
            }
            out_arrows.push(Arrow { name, tail: t, head: h });
        }
        Ok(Self::from_parts(vertices, out_arrows))
    }

    /// Builds from already-resolved indices. Panics on out-of-range incidences.
    pub fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Quiver {
        for a in &arrows {
            assert!(a.tail < vertices.len() && a.head < vertices.len(), "dangling arrow {}", a.name);
        }
        let connected = components(vertices.len(), arrows.iter().map(|a| (a.tail, a.head))) == 1;
        Quiver { vertices, arrows, connected }
    }

    /// Succeeds iff the quiver is nonempty and connected.
    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyQuiver);
        }
        if !self.connected {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name).ok_or_else(|| Error::Unknown { kind: "vertex", name: name.into() })
    }

    pub fn arrow_named(&self, name: &str) -> Result<usize> {
        self.arrow_index(name).ok_or_else(|| Error::Unknown { kind: "arrow", name: name.into() })
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Connected with one fewer arrow than vertices; loops and parallel arrows rule this out.
    pub fn is_tree(&self) -> bool {
        self.connected && self.arrows.len() + 1 == self.vertices.len()
    }

    /// Same vertices and arrow names, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), tail: a.head, head: a.tail })
                .collect(),
            connected: self.connected,
        }
    }

    /// Every connected subquiver (vertex subset plus any subset of arrows between
    /// them, connected), ordered by vertex index set then arrow index set.
    pub fn connected_subquivers(self: &Arc<Self>) -> Vec<Subquiver> {
        let n = self.vertices.len();
        assert!(n < 24, "subquiver enumeration is exponential");
        let mut found: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for vmask in 1u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&i| vmask >> i & 1 == 1).collect();
            let inner: Vec<usize> = (0..self.arrows.len())
                .filter(|&a| {
                    let ar = &self.arrows[a];
                    vmask >> ar.tail & 1 == 1 && vmask >> ar.head & 1 == 1
                })
                .collect();
            assert!(inner.len() < 24, "subquiver enumeration is exponential");
            for amask in 0u32..(1 << inner.len()) {
                let arrs: Vec<usize> =
                    (0..inner.len()).filter(|&j| amask >> j & 1 == 1).map(|j| inner[j]).collect();
                let local = |v: usize| vs.binary_search(&v).expect("endpoint in subset");
                let edges = arrs.iter().map(|&a| (local(self.arrows[a].tail), local(self.arrows[a].head)));
                if components(vs.len(), edges) == 1 {
                    found.push((vs.clone(), arrs));
                }
            }
        }
        found.sort();
        found.into_iter().map(|(vs, arrs)| Subquiver::new(self, &vs, &arrs)).collect()
    }

    /// The subquiver that is all of `self`.
    pub fn full_subquiver(self: &Arc<Self>) -> Subquiver {
        let vs: Vec<usize> = (0..self.num_vertices()).collect();
        let arrs: Vec<usize> = (0..self.num_arrows()).collect();
        Subquiver::new(self, &vs, &arrs)
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver {{ vertices: {:?}, arrows: [", self.vertices)?;
        for (i, a) in self.arrows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {} -> {}", a.name, self.vertices[a.tail], self.vertices[a.head])?;
        }
        write!(f, "] }}")
    }
}

/// Number of connected components of the underlying undirected graph.
fn components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// A path: either trivial at a vertex, or arrows in traversal order (first arrow first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path { start: vertex, end: vertex, arrows: Vec::new() }
    }

    /// Path traversing `arrows` in order; consecutive arrows must compose.
    pub fn new(q: &Quiver, arrows: &[usize]) -> Result<Path> {
        let Some((&first, rest)) = arrows.split_first() else {
            return Err(Error::NotComposable("a nontrivial path needs an arrow".into()));
        };
        let mut p = Path { start: q.arrow(first).tail, end: q.arrow(first).head, arrows: vec![first] };
        for &a in rest {
            p = Path::new(q, &[a])?.compose(q, &p)?;
        }
        Ok(p)
    }

    /// Path from arrow names in traversal order.
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Path> {
        let idx: Vec<usize> = names.iter().map(|n| q.arrow_named(n)).collect::<Result<_>>()?;
        Path::new(q, &idx)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ first`: traverse `first`, then `self`.
    pub fn compose(&self, q: &Quiver, first: &Path) -> Result<Path> {
        if first.end != self.start {
            return Err(Error::NotComposable(format!(
                "path ends at `{}` but the next starts at `{}`",
                q.vertex_name(first.end),
                q.vertex_name(self.start)
            )));
        }
        let mut arrows = first.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Ok(Path { start: first.start, end: self.end, arrows })
    }

    /// Conventional right-to-left name, e.g. `ba` for `a` then `b`; `e_x` when trivial.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertex_name(self.start));
        }
        self.arrows.iter().rev().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("")
    }
}

/// A map of directed graphs `source → target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverMorphism {
    source: Arc<Quiver>,
    target: Arc<Quiver>,
    vertex_map: Vec<usize>,
    arrow_map: Vec<usize>,
}

impl QuiverMorphism {
    pub fn new(
        source: Arc<Quiver>,
        target: Arc<Quiver>,
        vertex_map: Vec<usize>,
        arrow_map: Vec<usize>,
    ) -> Result<Self> {
        let m = QuiverMorphism { source, target, vertex_map, arrow_map };
        m.validate()?;
        Ok(m)
    }

    /// Builds from name pairs; every source vertex and arrow must be mapped exactly once.
    pub fn from_names(
        source: Arc<Quiver>,
        target: Arc<Quiver>,
        vertices: &[(&str, &str)],
        arrows: &[(&str, &str)],
    ) -> Result<Self> {
        let mut vmap = vec![None; source.num_vertices()];
        for (s, t) in vertices {
            let i = source.vertex(s)?;
            if vmap[i].replace(target.vertex(t)?).is_some() {
                return Err(Error::InvalidMorphism(format!("vertex `{s}` mapped twice")));
            }
        }
        let mut amap = vec![None; source.num_arrows()];
        for (s, t) in arrows {
            let i = source.arrow_named(s)?;
            if amap[i].replace(target.arrow_named(t)?).is_some() {
                return Err(Error::InvalidMorphism(format!("arrow `{s}` mapped twice")));
            }
        }
        let vertex_map = vmap
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::InvalidMorphism(format!("vertex `{}` is not mapped", source.vertex_name(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let arrow_map = amap
            .into_iter()
            .enumerate()
            .map(|(i, a)| {
                a.ok_or_else(|| {
                    Error::InvalidMorphism(format!("arrow `{}` is not mapped", source.arrow(i).name))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, vertex_map, arrow_map)
    }

    pub fn identity(q: Arc<Quiver>) -> Self {
        let vertex_map = (0..q.num_vertices()).collect();
        let arrow_map = (0..q.num_arrows()).collect();
        QuiverMorphism { source: q.clone(), target: q, vertex_map, arrow_map }
    }

    /// Checks that every arrow's image runs between the images of its endpoints.
    pub fn validate(&self) -> Result<()> {
        if self.vertex_map.len() != self.source.num_vertices()
            || self.arrow_map.len() != self.source.num_arrows()
        {
            return Err(Error::InvalidMorphism("map lengths do not match the source quiver".into()));
        }
        if let Some(&v) = self.vertex_map.iter().find(|&&v| v >= self.target.num_vertices()) {
            return Err(Error::InvalidMorphism(format!("vertex index {v} out of range")));
        }
        for (a, &b) in self.arrow_map.iter().enumerate() {
            if b >= self.target.num_arrows() {
                return Err(Error::InvalidMorphism(format!("arrow index {b} out of range")));
            }
            let (sa, tb) = (self.source.arrow(a), self.target.arrow(b));
            if self.vertex_map[sa.tail] != tb.tail || self.vertex_map[sa.head] != tb.head {
                return Err(Error::InvalidMorphism(format!(
                    "arrow `{}` sent to `{}` but endpoints do not match",
                    sa.name, tb.name
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<Quiver> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Quiver> {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }
}

/// A connected subquiver together with its inclusion into the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subquiver {
    quiver: Arc<Quiver>,
    inclusion: QuiverMorphism,
}

impl Subquiver {
    fn new(parent: &Arc<Quiver>, vs: &[usize], arrs: &[usize]) -> Subquiver {
        let local = |v: usize| vs.iter().position(|&x| x == v).expect("endpoint in subset");
        let q = Quiver::from_parts(
            vs.iter().map(|&v| parent.vertices[v].clone()).collect(),
            arrs.iter()
                .map(|&a| {
                    let ar = &parent.arrows[a];
                    Arrow { name: ar.name.clone(), tail: local(ar.tail), head: local(ar.head) }
                })
                .collect(),
        );
        let q = Arc::new(q);
        let inclusion = QuiverMorphism {
            source: q.clone(),
            target: parent.clone(),
            vertex_map: vs.to_vec(),
            arrow_map: arrs.to_vec(),
        };
        Subquiver { quiver: q, inclusion }
    }

    /// Subquiver on the named vertices and arrows; must be connected.
    pub fn from_names(parent: &Arc<Quiver>, vertices: &[&str], arrows: &[&str]) -> Result<Subquiver> {
        let mut vs: Vec<usize> = vertices.iter().map(|v| parent.vertex(v)).collect::<Result<_>>()?;
        let mut arrs: Vec<usize> = arrows.iter().map(|a| parent.arrow_named(a)).collect::<Result<_>>()?;
        vs.sort_unstable();
        vs.dedup();
        arrs.sort_unstable();
        arrs.dedup();
        for &a in &arrs {
            let ar = parent.arrow(a);
            if vs.binary_search(&ar.tail).is_err() || vs.binary_search(&ar.head).is_err() {
                return Err(Error::InvalidMorphism(format!(
                    "arrow `{}` has an endpoint outside the subquiver",
                    ar.name
                )));
            }
        }
        let s = Subquiver::new(parent, &vs, &arrs);
        s.quiver.validate()?;
        Ok(s)
    }

    /// The subquiver traced out by a path (its vertices and arrows).
    pub fn from_path(parent: &Arc<Quiver>, p: &Path) -> Result<Subquiver> {
        let mut vs = vec![p.start()];
        for &a in p.arrows() {
            vs.push(parent.arrow(a).head);
        }
        vs.sort_unstable();
        vs.dedup();
        let mut arrs = p.arrows().to_vec();
        arrs.sort_unstable();
        arrs.dedup();
        Ok(Subquiver::new(parent, &vs, &arrs))
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn inclusion(&self) -> &QuiverMorphism {
        &self.inclusion
    }

    pub fn parent(&self) -> &Arc<Quiver> {
        &self.inclusion.target
    }

    /// `{v1,v2|a,b}` in parent order.
    pub fn label(&self) -> String {
        let vs: Vec<&str> = self.quiver.vertices.iter().map(String::as_str).collect();
        let arrs: Vec<&str> = self.quiver.arrows.iter().map(|a| a.name.as_str()).collect();
        format!("{{{}|{}}}", vs.join(","), arrs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Arc<Quiver> {
        Arc::new(Quiver::new(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]).unwrap())
    }

    fn loop_quiver() -> Arc<Quiver> {
        Arc::new(Quiver::new(["0"], [("l", "0", "0")]).unwrap())
    }

    #[test]
    fn validation() {
        assert!(Quiver::new(["x"], Vec::<(&str, &str, &str)>::new()).unwrap().validate().is_ok());
        let two = Quiver::new(["x", "y"], Vec::<(&str, &str, &str)>::new()).unwrap();
        assert_eq!(two.validate(), Err(Error::Disconnected));
        assert!(loop_quiver().validate().is_ok());
        assert!(matches!(
            Quiver::new(["x", "x"], Vec::<(&str, &str, &str)>::new()),
            Err(Error::DuplicateName { kind: "vertex", .. })
        ));
        assert!(matches!(
            Quiver::new(["x"], [("a", "x", "z")]),
            Err(Error::Unknown { kind: "vertex", .. })
        ));
        assert!(matches!(
            Quiver::new(["x", "y"], [("a", "x", "y"), ("a", "y", "x")]),
            Err(Error::DuplicateName { kind: "arrow", .. })
        ));
        let empty = Quiver::new(Vec::<&str>::new(), Vec::<(&str, &str, &str)>::new()).unwrap();
        assert_eq!(empty.validate(), Err(Error::EmptyQuiver));
    }

    #[test]
    fn opposite_examples() {
        let q = a3();
        let op = q.opposite();
        assert_eq!(op.arrow(0).tail, 1);
        assert_eq!(op.arrow(0).head, 0);
        assert_eq!(op.opposite(), *q);
        assert_eq!(loop_quiver().opposite(), *loop_quiver());
        let k2 = Quiver::new(["x", "y"], [("p", "x", "y"), ("q", "x", "y")]).unwrap();
        let k2op = k2.opposite();
        assert!(k2op.arrows().iter().all(|a| a.tail == 1 && a.head == 0));
    }

    #[test]
    fn subquivers_of_a3() {
        let subs = a3().connected_subquivers();
        assert_eq!(subs.len(), 6);
        assert_eq!(subs.iter().filter(|s| s.quiver().num_arrows() == 0).count(), 3);
        assert!(subs.iter().all(|s| s.quiver().validate().is_ok()));
        let single = Arc::new(Quiver::new(["x"], Vec::<(&str, &str, &str)>::new()).unwrap());
        assert_eq!(single.connected_subquivers().len(), 1);
    }

    #[test]
    fn subquivers_of_loop_include_arrowless_vertex() {
        // {0|} and {0|l}
        assert_eq!(loop_quiver().connected_subquivers().len(), 2);
    }

    #[test]
    fn path_composition() {
        let q = a3();
        let a = Path::from_names(&q, &["a"]).unwrap();
        let b = Path::from_names(&q, &["b"]).unwrap();
        let ba = b.compose(&q, &a).unwrap();
        assert_eq!(ba.display(&q), "ba");
        assert_eq!(ba.len(), 2);
        assert_eq!(Path::trivial(1).compose(&q, &a).unwrap(), a);
        assert_eq!(a.compose(&q, &Path::trivial(0)).unwrap(), a);
        assert!(a.compose(&q, &b).is_err());
        assert!(Path::from_names(&q, &["b", "a"]).is_err());
    }

    #[test]
    fn morphism_validation() {
        let q = a3();
        assert!(QuiverMorphism::identity(q.clone()).validate().is_ok());
        // collapse everything onto a loop
        let l = loop_quiver();
        let m = QuiverMorphism::from_names(
            q.clone(),
            l.clone(),
            &[("1", "0"), ("2", "0"), ("3", "0")],
            &[("a", "l"), ("b", "l")],
        );
        assert!(m.is_ok());
        let bad = QuiverMorphism::new(q.clone(), q.clone(), vec![0, 1, 2], vec![1, 0]);
        assert!(matches!(bad, Err(Error::InvalidMorphism(_))));
        let missing = QuiverMorphism::from_names(q.clone(), l, &[("1", "0")], &[]);
        assert!(missing.is_err());
    }

    #[test]
    fn trees() {
        assert!(a3().is_tree());
        assert!(!loop_quiver().is_tree());
        let k2 = Quiver::new(["x", "y"], [("p", "x", "y"), ("q", "x", "y")]).unwrap();
        assert!(!k2.is_tree());
    }
}
