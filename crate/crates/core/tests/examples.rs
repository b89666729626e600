use std::sync::Arc;

use quiverrank::fixtures::{self, thin};
use quiverrank::{
    decompose, global_rank, global_tensor, hom_space, is_indec, iso, limit, max_epi_sub, max_mono_quot,
    pushforward_rank, ClassRegistry, Matrix, Path, RankFn, Rational, Representation, Subquiver,
};

type M = Matrix<Rational>;
type R = Representation<Rational>;

fn dims_of(parts: &[R]) -> Vec<Vec<usize>> {
    let mut d: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
    d.sort();
    d
}

#[test]
fn v3_tensor_square() {
    let v = fixtures::v3();
    let d = decompose(&v.tensor(&v).unwrap()).unwrap();
    assert_eq!(
        dims_of(&d.parts),
        vec![vec![1, 0, 0, 0], vec![1, 0, 0, 1], vec![1, 0, 1, 0], vec![1, 1, 0, 0]]
    );
}

#[test]
fn w_tensor_square() {
    let w = fixtures::w();
    let d = decompose(&w.tensor(&w).unwrap()).unwrap();
    assert_eq!(dims_of(&d.parts), vec![vec![0, 0, 1, 0], vec![0, 0, 1, 0], vec![1, 1, 2, 1]]);
    let big = d.parts.iter().find(|p| p.dims() == [1, 1, 2, 1]).unwrap();
    assert!(iso(big, &w).unwrap());
}

#[test]
fn v3_schur_powers() {
    let v = fixtures::v3();
    let s2 = decompose(&v.symmetric(2)).unwrap();
    assert_eq!(dims_of(&s2.parts), vec![vec![1, 0, 0, 1], vec![1, 0, 1, 0], vec![1, 1, 0, 0]]);
    let e2 = v.exterior(2);
    assert!(iso(&e2, &R::simple(fixtures::q3(), 0)).unwrap());
}

#[test]
fn hom_and_limits_of_w() {
    let w = fixtures::w();
    let one = R::identity(fixtures::qa());
    assert_eq!(hom_space(&one, &w).unwrap().len(), 0);
    assert_eq!(hom_space(&w, &one).unwrap().len(), 1);
    let l = limit(&w).unwrap();
    assert_eq!((l.lim_dim, l.colim_dim, l.eta.rank()), (0, 1, 0));
}

#[test]
fn k4_example_as_printed() {
    let v = fixtures::k4_rep();
    let d = max_epi_sub(&v);
    assert_eq!(d.carrier.dims(), &[1, 1]);
    assert_eq!(d.witness.comp(0), &M::from_ints(2, 1, &[1, 0]));
    assert_eq!(d.witness.comp(1), &M::from_ints(3, 1, &[1, 0, 0]));
    assert!(is_indec(&v).unwrap());
    assert_eq!(decompose(&v).unwrap().parts, vec![v.clone()]);
    // V_a has rank 1 as printed, so the monomorphic quotient is smaller than V.
    assert_ne!(max_mono_quot(&v).carrier, v);
}

#[test]
fn k2_theta_is_strict() {
    let (v, w) = fixtures::k2_pair();
    assert_eq!(max_epi_sub(&v.tensor(&w).unwrap()).carrier.dims(), &[1, 0]);
    let dv = max_epi_sub(&v).carrier;
    let dw = max_epi_sub(&w).carrier;
    assert!(dv.tensor(&dw).unwrap().is_zero());
}

#[test]
fn cover_pushforward() {
    let w = fixtures::w();
    assert_eq!(pushforward_rank(&fixtures::alpha(), &w).unwrap(), 1);
    assert_eq!(global_rank(&w).unwrap(), 0);
    // supported away from vertex 4: pushforward vanishes
    let partial = thin(&fixtures::qa(), &[1, 1, 1, 0]);
    assert_eq!(pushforward_rank(&fixtures::alpha(), &partial).unwrap(), 0);
}

#[test]
fn pullback_duplicates_middle() {
    let w = fixtures::w();
    let p = w.pullback(&fixtures::alpha()).unwrap();
    assert_eq!(p.dims(), &[1, 1, 2, 2, 1]);
    assert_eq!(p.map(2), w.map(2));
    assert_eq!(p.map(3), w.map(2));
}

#[test]
fn subquiver_counts() {
    assert_eq!(fixtures::qa().connected_subquivers().len(), 11);
    assert_eq!(fixtures::q3().connected_subquivers().len(), 11);
    assert_eq!(fixtures::a3().connected_subquivers().len(), 6);
}

#[test]
fn a3_rank_is_rank_of_composite() {
    let v = fixtures::a3_rep();
    let q = fixtures::a3();
    let ba = Path::from_names(&q, &["a", "b"]).unwrap();
    let r = v.path_map(&ba).unwrap().rank();
    let g = global_tensor(&v).unwrap();
    assert_eq!(g.global_rank, r);
    assert!(g.gamma.dims().iter().all(|&d| d == r));
    let sub = Subquiver::from_path(&q, &ba).unwrap();
    assert_eq!(quiverrank::subquiver_rank(&v, &sub).unwrap(), r);
}

fn integer_det(rows: &[Vec<i64>]) -> Rational {
    let n = rows.len();
    let flat: Vec<i64> = rows.iter().flatten().copied().collect();
    M::from_ints(n, rows[0].len(), &flat).det().unwrap()
}

#[test]
fn qa_rank_matrix_is_unimodular() {
    let reg = ClassRegistry::new(fixtures::qa()).unwrap();
    let mut fns: Vec<RankFn> = reg.subquivers().iter().cloned().map(RankFn::Subquiver).collect();
    fns.push(RankFn::Pushforward(fixtures::alpha()));
    assert_eq!(fns.len(), 12);
    let rows: Vec<Vec<i64>> = fixtures::qa_indecomposables()
        .iter()
        .map(|v| reg.rank_vector(&reg.ring_from(v).unwrap(), &fns).unwrap())
        .collect();
    let det = integer_det(&rows);
    assert!(det == Rational::from_integer(1.into()) || det == Rational::from_integer((-1).into()));
}

#[test]
fn q3_kernel_and_nilpotent() {
    let q = fixtures::q3();
    let reg = ClassRegistry::new(q.clone()).unwrap();
    let fns: Vec<RankFn> = reg.subquivers().iter().cloned().map(RankFn::Subquiver).collect();
    let ind = fixtures::q3_indecomposables();
    let cols: Vec<Vec<i64>> =
        ind.iter().map(|v| reg.rank_vector(&reg.ring_from(v).unwrap(), &fns).unwrap()).collect();
    // 11 x 12 matrix with columns indexed by indecomposables
    let flat: Vec<i64> = (0..11).flat_map(|i| cols.iter().map(move |c| c[i])).collect();
    let m = M::from_ints(11, 12, &flat);
    assert_eq!(m.rank(), 11);
    let e = reg
        .ring_add(&reg.ring_from(&fixtures::v3()).unwrap(), &reg.ring_from(&thin(&q, &[1, 0, 0, 0])).unwrap())
        .unwrap();
    let f = [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]
        .iter()
        .map(|d| reg.ring_from(&thin(&q, d)).unwrap())
        .reduce(|a, b| reg.ring_add(&a, &b).unwrap())
        .unwrap();
    let diff = reg.ring_sub(&e, &f).unwrap();
    assert!(reg.rank_vector(&diff, &fns).unwrap().iter().all(|&r| r == 0));
    assert!(reg.ring_mul(&diff, &diff).unwrap().is_zero());
}

#[test]
fn loop_dichotomy() {
    let inv = fixtures::loop_rep(M::from_ints(2, 2, &[0, 1, -1, 3]));
    assert_eq!(max_epi_sub(&inv).carrier, inv);
    let nil = fixtures::loop_rep(M::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]));
    assert!(max_epi_sub(&nil).carrier.is_zero());
}

#[test]
fn identity_on_fixture_quivers() {
    for q in [fixtures::qa(), fixtures::q3(), fixtures::k2(), fixtures::loop_quiver()] {
        let one = R::identity(q.clone());
        assert_eq!(global_rank(&one).unwrap(), 1);
        assert!(is_indec(&one).unwrap());
        let _: Arc<_> = q;
    }
}
