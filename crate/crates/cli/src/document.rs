use std::fmt::Write;
use std::sync::Arc;

use quiverrank::{Quiver, QuiverMorphism, Rational, Representation};

type R = Representation<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepEntry {
    pub name: String,
    pub quiver: String,
    pub rep: R,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub morphism: QuiverMorphism,
}

/// Named quivers, representations and quiver morphisms in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub quivers: Vec<(String, Arc<Quiver>)>,
    pub reps: Vec<RepEntry>,
    pub morphisms: Vec<MorphismEntry>,
}

impl Document {
    pub fn quiver(&self, name: &str) -> Option<&Arc<Quiver>> {
        self.quivers.iter().find(|(n, _)| n == name).map(|(_, q)| q)
    }

    pub fn rep(&self, name: &str) -> Option<&RepEntry> {
        self.reps.iter().find(|r| r.name == name)
    }

    pub fn morphism(&self, name: &str) -> Option<&MorphismEntry> {
        self.morphisms.iter().find(|m| m.name == name)
    }

    /// The document in the input language; parsing the output gives back an equal document.
    pub fn print(&self) -> String {
        let mut out = String::new();
        for (name, q) in &self.quivers {
            out.push_str(&print_quiver(name, q));
            out.push('\n');
        }
        for r in &self.reps {
            out.push_str(&print_rep(&r.name, &r.quiver, &r.rep));
            out.push('\n');
        }
        for m in &self.morphisms {
            out.push_str(&print_morphism(m));
            out.push('\n');
        }
        out
    }
}

pub fn print_quiver(name: &str, q: &Quiver) -> String {
    let mut out = format!("quiver {name} {{\n  vertices: {};\n", q.vertices().join(" "));
    for a in q.arrows() {
        writeln!(out, "  arrow {}: {} -> {};", a.name, q.vertex_name(a.tail), q.vertex_name(a.head)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// A `rep` block; maps with an empty matrix are left implicit.
pub fn print_rep(name: &str, quiver: &str, v: &R) -> String {
    let q = v.quiver();
    let mut out = format!("rep {name} over {quiver} {{\n");
    for (i, d) in v.dims().iter().enumerate() {
        writeln!(out, "  dim {} = {d};", q.vertex_name(i)).unwrap();
    }
    for (i, a) in q.arrows().iter().enumerate() {
        let m = v.map(i);
        if m.rows() > 0 && m.cols() > 0 {
            writeln!(out, "  map {} = {m};", a.name).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn print_morphism(m: &MorphismEntry) -> String {
    let (src, tgt) = (m.morphism.source(), m.morphism.target());
    let mut out = format!("morphism {}: {} -> {} {{\n", m.name, m.source, m.target);
    for (v, &w) in m.morphism.vertex_map().iter().enumerate() {
        writeln!(out, "  vertex {} -> {};", src.vertex_name(v), tgt.vertex_name(w)).unwrap();
    }
    for (a, &b) in m.morphism.arrow_map().iter().enumerate() {
        writeln!(out, "  arrow {} -> {};", src.arrow(a).name, tgt.arrow(b).name).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `(d1,d2,...)` in vertex order.
pub fn dims_label(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}
