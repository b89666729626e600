//! The standard example quivers and representations, built in code.
//!
//! The CLI ships the same data as DSL files; tests check that the two agree.

use std::sync::Arc;

use crate::field::Rational;
use crate::linalg::Matrix;
use crate::quiver::{Quiver, QuiverMorphism};
use crate::rep::Representation;

type M = Matrix<Rational>;
type R = Representation<Rational>;

fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Arc<Quiver> {
    Arc::new(Quiver::new(vertices.iter().copied(), arrows.iter().copied()).expect("fixture quiver"))
}

/// Three-subspace quiver: vertices `c, 1, 2, 3`, arrows `a_i : i → c`.
pub fn q3() -> Arc<Quiver> {
    quiver(&["c", "1", "2", "3"], &[("a1", "1", "c"), ("a2", "2", "c"), ("a3", "3", "c")])
}

/// Three lines in a plane, dimension vector `(2,1,1,1)`.
pub fn v3() -> R {
    R::new(
        q3(),
        vec![2, 1, 1, 1],
        vec![M::from_ints(2, 1, &[1, 0]), M::from_ints(2, 1, &[0, 1]), M::from_ints(2, 1, &[1, 1])],
    )
    .expect("fixture")
}

/// `1 → 3 ← 2`, `3 → 4`.
pub fn qa() -> Arc<Quiver> {
    quiver(&["1", "2", "3", "4"], &[("a", "1", "3"), ("b", "2", "3"), ("c", "3", "4")])
}

/// Dimension vector `(1,1,2,1)`: two lines in a plane, summed at vertex 4.
pub fn w() -> R {
    R::new(
        qa(),
        vec![1, 1, 2, 1],
        vec![M::from_ints(2, 1, &[1, 0]), M::from_ints(2, 1, &[0, 1]), M::from_ints(1, 2, &[1, 1])],
    )
    .expect("fixture")
}

pub fn a3() -> Arc<Quiver> {
    quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")])
}

/// A generic `A₃` representation with `rank(BA) = 1`.
pub fn a3_rep() -> R {
    R::new(
        a3(),
        vec![2, 3, 2],
        vec![M::from_ints(3, 2, &[1, 0, 0, 1, 0, 0]), M::from_ints(2, 3, &[1, 0, 0, 0, 0, 1])],
    )
    .expect("fixture")
}

/// `1 → 2 ← 3`.
pub fn two_sub() -> Arc<Quiver> {
    quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")])
}

/// `1 → 2 ← 3 → 4`.
pub fn a4alt() -> Arc<Quiver> {
    quiver(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "3", "2"), ("c", "3", "4")])
}

/// Kronecker quiver `x ⇉ y` with arrows `a, b`.
pub fn k2() -> Arc<Quiver> {
    quiver(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")])
}

/// On `K₂` with 1-dimensional spaces: `(V_a, V_b) = (1, 0)` and `(0, 1)`.
pub fn k2_pair() -> (R, R) {
    let one = |a: i64, b: i64| {
        R::new(k2(), vec![1, 1], vec![M::from_ints(1, 1, &[a]), M::from_ints(1, 1, &[b])]).expect("fixture")
    };
    (one(1, 0), one(0, 1))
}

/// Four-arrow Kronecker quiver `x ⇉⇉ y`.
pub fn k4() -> Arc<Quiver> {
    quiver(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y"), ("c", "x", "y"), ("d", "x", "y")])
}

/// Dimension vector `(2,3)` with the four printed matrices.
pub fn k4_rep() -> R {
    R::new(
        k4(),
        vec![2, 3],
        vec![
            M::from_ints(3, 2, &[1, 1, 0, 0, 0, 0]),
            M::from_ints(3, 2, &[1, 0, 0, 1, 0, 0]),
            M::from_ints(3, 2, &[1, 0, 0, 0, 0, 1]),
            M::from_ints(3, 2, &[1, 1, 0, 1, 0, 1]),
        ],
    )
    .expect("fixture")
}

/// One vertex with one loop.
pub fn loop_quiver() -> Arc<Quiver> {
    quiver(&["0"], &[("l", "0", "0")])
}

pub fn loop_rep(m: M) -> R {
    R::new(loop_quiver(), vec![m.rows()], vec![m]).expect("square loop matrix")
}

/// `1 → 3a → 4 ← 3b ← 2`.
pub fn qp() -> Arc<Quiver> {
    quiver(
        &["1", "2", "3a", "3b", "4"],
        &[("a", "1", "3a"), ("b", "2", "3b"), ("c1", "3a", "4"), ("c2", "3b", "4")],
    )
}

/// `QP → QA` identifying vertices and arrows with the same label.
pub fn alpha() -> QuiverMorphism {
    QuiverMorphism::from_names(
        qp(),
        qa(),
        &[("1", "1"), ("2", "2"), ("3a", "3"), ("3b", "3"), ("4", "4")],
        &[("a", "a"), ("b", "b"), ("c1", "c"), ("c2", "c")],
    )
    .expect("fixture morphism")
}

/// Representation with the given dimension vector (entries 0 or 1) and every
/// arrow between nonzero spaces acting by `[[1]]`.
pub fn thin(q: &Arc<Quiver>, dims: &[usize]) -> R {
    let mats = q
        .arrows()
        .iter()
        .map(|a| {
            let (h, t) = (dims[a.head], dims[a.tail]);
            if h == 1 && t == 1 {
                M::identity(1)
            } else {
                M::zeros(h, t)
            }
        })
        .collect();
    R::new(q.clone(), dims.to_vec(), mats).expect("thin representation")
}

/// The twelve indecomposables of `QA` in the vertex order `1,2,3,4`.
pub fn qa_indecomposables() -> Vec<R> {
    let q = qa();
    let mut out: Vec<R> = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 0, 1, 0],
        [0, 1, 1, 0],
        [0, 0, 1, 1],
        [1, 1, 1, 0],
        [1, 0, 1, 1],
        [0, 1, 1, 1],
        [1, 1, 1, 1],
    ]
    .iter()
    .map(|d| thin(&q, d))
    .collect();
    out.push(w());
    out
}

/// The twelve indecomposables of `Q3` in the vertex order `c,1,2,3`.
pub fn q3_indecomposables() -> Vec<R> {
    let q = q3();
    let mut out: Vec<R> = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [1, 1, 1, 0],
        [1, 1, 0, 1],
        [1, 0, 1, 1],
        [1, 1, 1, 1],
    ]
    .iter()
    .map(|d| thin(&q, d))
    .collect();
    out.push(v3());
    out
}
