//! Reproducible verification suites over every module.
//!
//! Each suite draws its random instances from a seeded stream, checks one
//! family of identities exactly (or at a stated numeric tolerance), and
//! reports a single pass/fail/skipped result with enough detail to diagnose
//! a failure from the report alone. The CLI selftest command and the
//! acceptance test target both run these.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charpoly::{char_poly, is_nilpotent, pseudo_det, spectral_count};
use crate::complex::{
    betti_numbers, clique_complex, dirac_operator, euler_characteristic_check,
    graph_skeleton, DEFAULT_SIMPLEX_BUDGET,
};
use crate::graph::{
    brute_force_rooted_forest_count, brute_force_tree_count, rooted_forest_count,
    spanning_tree_count, Graph,
};
use crate::matrix::{mat_mul, Matrix};
use crate::minors::{
    append_combination_rows, append_parallel_rows, cauchy_binet_coeffs, classical_det,
    diag_minor_trace, exterior_power, minor_pair_sum, pythagoras_sum, subsets,
};
use crate::numeric::{
    frobenius_norm, log_trace_check, nonzero_eigenvalue_count, pseudo_pfaffian_abs,
    symmetric_eigenvalues, volume_check,
};
use crate::reduction::{inverse, pseudo_inverse, rank, rank_factorization, satisfies_penrose};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn from_failures(name: &'static str, checked: usize, failures: Vec<String>) -> Check {
        if failures.is_empty() {
            Check {
                name,
                status: Status::Pass,
                detail: format!("{checked} instances checked"),
            }
        } else {
            Check {
                name,
                status: Status::Fail,
                detail: format!(
                    "{} of {} instances failed; first: {}",
                    failures.len(),
                    checked,
                    failures[0]
                ),
            }
        }
    }

    fn skipped(name: &'static str) -> Check {
        Check {
            name,
            status: Status::Skipped,
            detail: "skipped: zero budget".into(),
        }
    }
}

/// Instance counts for each randomized suite. The acceptance run uses the
/// full counts; `scaled` shrinks everything uniformly for quick selftests.
#[derive(Clone, Copy, Debug)]
pub struct SuiteBudget {
    pub coefficient_pairs: usize,
    pub multiplicativity_pairs: usize,
    pub algebra_instances: usize,
    pub minor_property_instances: usize,
    pub core_instances: usize,
    pub append_instances: usize,
    pub skew_matrices: usize,
    pub random_graphs: usize,
}

impl SuiteBudget {
    /// Full instance counts used by the acceptance suite.
    pub fn acceptance() -> Self {
        SuiteBudget {
            coefficient_pairs: 200,
            multiplicativity_pairs: 50,
            algebra_instances: 50,
            minor_property_instances: 50,
            core_instances: 50,
            append_instances: 50,
            skew_matrices: 100,
            random_graphs: 30,
        }
    }

    /// Uniformly scaled-down counts; 0 skips every suite.
    pub fn scaled(size: usize) -> Self {
        let full = SuiteBudget::acceptance();
        SuiteBudget {
            coefficient_pairs: size.min(full.coefficient_pairs),
            multiplicativity_pairs: size.min(full.multiplicativity_pairs),
            algebra_instances: size.min(full.algebra_instances),
            minor_property_instances: size.min(full.minor_property_instances),
            core_instances: size.min(full.core_instances),
            append_instances: size.min(full.append_instances),
            skew_matrices: size.min(full.skew_matrices),
            random_graphs: size.min(full.random_graphs),
        }
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| Scalar::from_int(rng.gen_range(-bound..=bound)))
        .collect();
    Matrix::new(rows, cols, data)
}

/// Rational entries with small denominators.
fn rand_rational_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| Scalar::ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=3)))
        .collect();
    Matrix::new(rows, cols, data)
}

fn rand_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    loop {
        let a = if rng.gen_bool(0.3) {
            rand_rational_matrix(rng, n, n, bound)
        } else {
            rand_matrix(rng, n, n, bound)
        };
        if !classical_det(&a).expect("square").is_zero() {
            return a;
        }
    }
}

fn rand_low_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize, r: usize, bound: i64) -> Matrix {
    let u = rand_matrix(rng, rows, r, bound);
    let v = rand_matrix(rng, r, cols, bound);
    &u * &v
}

/// Square matrix of mixed character: dense, low rank, or nilpotent.
fn rand_mixed_square(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    match rng.gen_range(0..4u32) {
        1 => {
            let r = rng.gen_range(0..=n.min(2));
            rand_low_rank(rng, n, n, r, bound)
        }
        2 => rand_nilpotent(rng, n, bound),
        _ => rand_matrix(rng, n, n, bound),
    }
}

fn rand_symmetric(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let a = if rng.gen_bool(0.25) {
        rand_rational_matrix(rng, n, n, bound)
    } else {
        rand_matrix(rng, n, n, bound)
    };
    &a + &a.transpose()
}

fn rand_skew(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let a = rand_matrix(rng, n, n, bound);
    &a - &a.transpose()
}

/// Strictly upper triangular, conjugated by a unimodular lower-triangular
/// matrix so the nilpotent structure is not visible from sparsity.
fn rand_nilpotent(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let mut upper = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            upper[(i, j)] = Scalar::from_int(rng.gen_range(-bound..=bound));
        }
    }
    let mut s = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            s[(i, j)] = Scalar::from_int(rng.gen_range(-1..=1));
        }
    }
    let s_inv = inverse(&s).expect("unit triangular is invertible");
    &(&s * &upper) * &s_inv
}

/// Skew-symmetric of controlled even rank: a sum of r rank-2 blades.
fn rand_skew_mixed_rank(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let blades = rng.gen_range(0..=(n / 2).min(3));
    let mut a = Matrix::zeros(n, n);
    for _ in 0..blades {
        let u = rand_matrix(rng, n, 1, bound);
        let v = rand_matrix(rng, n, 1, bound);
        let uvt = &u * &v.transpose();
        let vut = &v * &u.transpose();
        a = &a + &(&uvt - &vut);
    }
    a
}

/// Connected test graphs: complete, cycle, path, and star families plus
/// seeded random connected graphs with at most 16 edges.
pub fn graph_corpus(seed: u64, random_graphs: usize) -> Vec<Graph> {
    let mut corpus = Vec::new();
    for n in 2..=5 {
        corpus.push(Graph::complete(n));
    }
    for n in 3..=8 {
        corpus.push(Graph::cycle(n));
    }
    for n in 2..=8 {
        corpus.push(Graph::path(n));
    }
    for leaves in 3..=7 {
        corpus.push(Graph::star(leaves));
    }
    let mut rng = rng_for(seed, 0xC0FFEE);
    let mut added = 0;
    while added < random_graphs {
        let n = rng.gen_range(5..=9usize);
        let p = rng.gen_range(0.25..0.45f64);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("generated edges are valid");
        if g.is_connected() && g.edge_count() <= 16 {
            corpus.push(g);
            added += 1;
        }
    }
    corpus
}

/// Frozen small instances with exactly known outputs.
pub fn check_known_values() -> Check {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut expect = |label: &str, ok: bool| {
        checked += 1;
        if !ok {
            failures.push(label.to_string());
        }
    };

    // 3x2 pair with matching pseudo-determinants 11
    let f = Matrix::from_int_rows(&[&[1, 4], &[2, 5], &[3, 6]]);
    let g = Matrix::from_int_rows(&[&[1, 0], &[1, 1], &[1, 0]]);
    let ftg = mat_mul(&f.transpose(), &g).unwrap();
    let fgt = mat_mul(&f, &g.transpose()).unwrap();
    expect("3x2 pair: Det(F^T G) = 11", pseudo_det(&ftg).unwrap() == Scalar::from_int(11));
    expect("3x2 pair: Det(F G^T) = 11", pseudo_det(&fgt).unwrap() == Scalar::from_int(11));
    expect(
        "3x2 pair: minor route = 11",
        crate::minors::pseudo_det_via_minors(&f, &g).unwrap() == Scalar::from_int(11),
    );

    // 2x3 pair with pseudo-determinant 12 through k = 1
    let f = Matrix::from_int_rows(&[&[3, 1, 1], &[2, 2, 2]]);
    let g = Matrix::from_int_rows(&[&[0, 0, 2], &[0, 3, 2]]);
    let ftg = mat_mul(&f.transpose(), &g).unwrap();
    expect("2x3 pair: Det = 12", pseudo_det(&ftg).unwrap() == Scalar::from_int(12));
    expect("2x3 pair: k = 1", spectral_count(&ftg).unwrap() == 1);
    expect(
        "2x3 pair: k=1 minor sum = 12",
        minor_pair_sum(&f, &g, 1).unwrap() == Scalar::from_int(12),
    );

    // singular 2x2 and rank-one 4x4: pseudo-determinant equals the trace
    let a = Matrix::from_int_rows(&[&[5, 6], &[10, 12]]);
    expect("[[5,6],[10,12]]: Det = 17", pseudo_det(&a).unwrap() == Scalar::from_int(17));
    let rows = [1i64, 2, 3, 4];
    let b = Matrix::from_int_rows(&[&rows, &rows, &rows, &rows]);
    expect("rank-one 4x4: Det = 10", pseudo_det(&b).unwrap() == Scalar::from_int(10));

    // k = 1 pair sum 2*3 + 5*7 = 41
    let f = Matrix::from_int_rows(&[&[2, 5], &[0, 0], &[0, 0]]);
    let g = Matrix::from_int_rows(&[&[3, 7], &[0, 1], &[0, 0]]);
    expect(
        "sparse pair: k=1 sum = 41",
        minor_pair_sum(&f, &g, 1).unwrap() == Scalar::from_int(41),
    );
    let ftg = mat_mul(&f.transpose(), &g).unwrap();
    expect("sparse pair: Det = 41", pseudo_det(&ftg).unwrap() == Scalar::from_int(41));

    // nilpotent product: Det = 1
    let f = Matrix::from_int_rows(&[&[-1, -1], &[1, 1]]);
    let ftg = mat_mul(&f.transpose(), &Matrix::identity(2)).unwrap();
    expect("nilpotent product: Det = 1", pseudo_det(&ftg).unwrap() == Scalar::one());
    expect("nilpotent product: is nilpotent", is_nilpotent(&ftg).unwrap());

    // spectral count strictly below rank
    let g = Matrix::from_int_rows(&[&[1, -1, -1], &[1, -1, -1], &[-2, 2, -1]]);
    let p = char_poly(&g).unwrap();
    expect(
        "3x3 with k < rank: char poly = -x^2 - x^3",
        p.coeffs()
            == [
                Scalar::zero(),
                Scalar::zero(),
                Scalar::from_int(-1),
                Scalar::from_int(-1)
            ],
    );
    expect("3x3 with k < rank: Det = -1", pseudo_det(&g).unwrap() == Scalar::from_int(-1));
    expect("3x3 with k < rank: k = 1", spectral_count(&g).unwrap() == 1);
    expect("3x3 with k < rank: rank = 2", rank(&g) == 2);

    // selfadjoint 3x3: char poly, Det, and the nine squared minors
    let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
    let p = char_poly(&a).unwrap();
    expect(
        "selfadjoint 3x3: char poly = 41x + 6x^2 - x^3",
        p.coeffs()
            == [
                Scalar::zero(),
                Scalar::from_int(41),
                Scalar::from_int(6),
                Scalar::from_int(-1)
            ],
    );
    expect("selfadjoint 3x3: Det = -41", pseudo_det(&a).unwrap() == Scalar::from_int(-41));
    let mut squares = Vec::new();
    for ri in subsets(3, 2) {
        for ci in subsets(3, 2) {
            let d = classical_det(&a.submatrix(&ri, &ci)).unwrap();
            squares.push(&d * &d);
        }
    }
    let expected: Vec<Scalar> = [256, 256, 144, 256, 256, 144, 144, 144, 81]
        .iter()
        .map(|&v| Scalar::from_int(v))
        .collect();
    expect("selfadjoint 3x3: squared minor table", squares == expected);
    expect(
        "selfadjoint 3x3: squared minors sum to 1681",
        pythagoras_sum(&a, 2).unwrap() == Scalar::from_int(1681),
    );

    // sparse 6x6 with sixteen unit minors
    let a = Matrix::from_int_rows(&[
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 1, 0, 0, 1],
        &[0, 1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 1, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 1, 0, 0, 0, 0],
    ]);
    expect("sparse 6x6: Det = 4", pseudo_det(&a).unwrap() == Scalar::from_int(4));
    let mut nonzero = 0usize;
    let mut all_unit = true;
    for ri in subsets(6, 4) {
        for ci in subsets(6, 4) {
            let d = classical_det(&a.submatrix(&ri, &ci)).unwrap();
            if !d.is_zero() {
                nonzero += 1;
                all_unit &= d.abs().is_one();
            }
        }
    }
    expect("sparse 6x6: 16 nonzero order-4 minors", nonzero == 16);
    expect("sparse 6x6: every nonzero minor is a unit", all_unit);
    expect(
        "sparse 6x6: squared minor sum = 16",
        pythagoras_sum(&a, 4).unwrap() == Scalar::from_int(16),
    );

    // row vector outer product: Det = 30, squared = 900
    let f = Matrix::from_int_rows(&[&[1, 2, 3, 4]]);
    let a = mat_mul(&f.transpose(), &f).unwrap();
    expect("outer product: Det = 30", pseudo_det(&a).unwrap() == Scalar::from_int(30));
    expect(
        "outer product: squared minor sum = 900",
        pythagoras_sum(&a, 1).unwrap() == Scalar::from_int(900),
    );

    Check::from_failures("known-values", checked, failures)
}

/// Exact-core invariants: Penrose conditions, rank factorization,
/// transpose algebra.
pub fn check_exact_core(seed: u64, instances: usize) -> Check {
    if instances == 0 {
        return Check::skipped("exact-core");
    }
    let mut rng = rng_for(seed, 1);
    let mut failures = Vec::new();
    for trial in 0..instances {
        let rows = rng.gen_range(1..=8usize);
        let cols = rng.gen_range(1..=8usize);
        let a = if rng.gen_bool(0.3) {
            let r = rng.gen_range(0..=rows.min(cols));
            rand_low_rank(&mut rng, rows, cols, r, 3)
        } else if rng.gen_bool(0.4) {
            rand_rational_matrix(&mut rng, rows, cols, 4)
        } else {
            rand_matrix(&mut rng, rows, cols, 4)
        };
        let pinv = pseudo_inverse(&a);
        if !satisfies_penrose(&a, &pinv) {
            failures.push(format!("trial {trial}: Penrose conditions failed for {a:?}"));
            continue;
        }
        let fact = rank_factorization(&a);
        if &fact.left * &fact.right != a || fact.rank != rank(&a) {
            failures.push(format!("trial {trial}: rank factorization mismatch"));
            continue;
        }
        if rank(&a) != rank(&a.transpose()) {
            failures.push(format!("trial {trial}: rank(A) != rank(A^T)"));
            continue;
        }
        let width = rng.gen_range(1..=6);
        let b = rand_matrix(&mut rng, cols, width, 4);
        let ab = mat_mul(&a, &b).unwrap();
        if ab.transpose() != mat_mul(&b.transpose(), &a.transpose()).unwrap() {
            failures.push(format!("trial {trial}: (AB)^T != B^T A^T"));
        }
    }
    Check::from_failures("exact-core", instances, failures)
}

/// Coefficient-level Cauchy-Binet: every characteristic coefficient of
/// F^T G equals the matching minor pair sum, for random integer pairs.
pub fn check_coefficient_identity(seed: u64, pairs: usize) -> Check {
    if pairs == 0 {
        return Check::skipped("cauchy-binet-coefficients");
    }
    let mut rng = rng_for(seed, 2);
    let mut failures = Vec::new();
    for trial in 0..pairs {
        let n = rng.gen_range(1..=6usize);
        let m = rng.gen_range(1..=8usize);
        let f = rand_matrix(&mut rng, n, m, 4);
        let g = rand_matrix(&mut rng, n, m, 4);
        let ftg = mat_mul(&f.transpose(), &g).unwrap();
        let p = char_poly(&ftg).unwrap();
        for k in 0..=m {
            let lhs = p.neg_power_coeff(k);
            let rhs = minor_pair_sum(&f, &g, k).unwrap();
            if lhs != rhs {
                failures.push(format!(
                    "trial {trial}: k={k}, coefficient {lhs} != minor sum {rhs} for F={f:?} G={g:?}"
                ));
                break;
            }
        }
        // generating polynomial evaluated at 1: det(1 + F^T G)
        let poly = cauchy_binet_coeffs(&f, &g).unwrap();
        let direct = classical_det(&(&Matrix::identity(m) + &ftg)).unwrap();
        if poly.eval(&Scalar::one()) != direct {
            failures.push(format!("trial {trial}: det(1 + F^T G) mismatch"));
        }
    }
    Check::from_failures("cauchy-binet-coefficients", pairs, failures)
}

/// Exterior powers are multiplicative and commute with transposition.
pub fn check_exterior_multiplicativity(seed: u64, pairs: usize) -> Check {
    if pairs == 0 {
        return Check::skipped("exterior-multiplicativity");
    }
    let mut rng = rng_for(seed, 3);
    let mut failures = Vec::new();
    for trial in 0..pairs {
        let n = rng.gen_range(1..=5usize);
        let m = rng.gen_range(1..=5usize);
        let p = rng.gen_range(1..=5usize);
        let f = rand_matrix(&mut rng, n, m, 3);
        let g = rand_matrix(&mut rng, m, p, 3);
        let fg = mat_mul(&f, &g).unwrap();
        for k in 0..=3usize {
            let lhs = exterior_power(&fg, k);
            let rhs = mat_mul(&exterior_power(&f, k), &exterior_power(&g, k)).unwrap();
            if lhs != rhs {
                failures.push(format!("trial {trial}: order {k} power not multiplicative"));
                break;
            }
            if exterior_power(&f.transpose(), k) != exterior_power(&f, k).transpose() {
                failures.push(format!("trial {trial}: order {k} power transpose mismatch"));
                break;
            }
        }
    }
    Check::from_failures("exterior-multiplicativity", pairs, failures)
}

/// Auxiliary minor-sum identities: scaling degree, squared-minor sums for
/// arbitrary matrices, diagonal minor traces, and the shifted determinant
/// being a sum of squares.
pub fn check_minor_sums(seed: u64, instances: usize) -> Check {
    if instances == 0 {
        return Check::skipped("minor-sums");
    }
    let mut rng = rng_for(seed, 4);
    let mut failures = Vec::new();
    for trial in 0..instances {
        let n = rng.gen_range(1..=5usize);
        let m = rng.gen_range(1..=5usize);
        let f = rand_matrix(&mut rng, n, m, 3);
        let g = rand_matrix(&mut rng, n, m, 3);
        let k = rng.gen_range(0..=n.min(m));
        // scaling one factor by c scales the order-k sum by c^k
        let c = Scalar::from_int(rng.gen_range(2..=3));
        let scaled = minor_pair_sum(&f.scale(&c), &g, k).unwrap();
        let base = minor_pair_sum(&f, &g, k).unwrap();
        if scaled != c.pow(k as u32) * &base {
            failures.push(format!("trial {trial}: scaling law failed at k={k}"));
            continue;
        }
        // Det(A^T A) equals the squared-minor sum at the rank of A
        let a = if rng.gen_bool(0.5) {
            let r = rng.gen_range(0..=n.min(m));
            rand_low_rank(&mut rng, n, m, r, 3)
        } else {
            f.clone()
        };
        let ata = mat_mul(&a.transpose(), &a).unwrap();
        let r = rank(&a);
        let lhs = pseudo_det(&ata).unwrap();
        let rhs = minor_pair_sum(&a, &a, r).unwrap();
        if lhs != rhs {
            failures.push(format!(
                "trial {trial}: Det(A^T A) = {lhs} but rank-order squared sum = {rhs}"
            ));
            continue;
        }
        // det(1 + F^T F) is one plus a sum of squares, hence >= 1
        let shifted = classical_det(&(&Matrix::identity(m) + &ata)).unwrap();
        let series = cauchy_binet_coeffs(&a, &a).unwrap().eval(&Scalar::one());
        if shifted != series || shifted < Scalar::one() {
            failures.push(format!("trial {trial}: det(1 + A^T A) = {shifted} vs {series}"));
            continue;
        }
        // diagonal minor traces match the characteristic coefficients
        let side = rng.gen_range(1..=6);
        let sq = rand_mixed_square(&mut rng, side, 3);
        let p = char_poly(&sq).unwrap();
        for k in 0..=sq.rows() {
            if diag_minor_trace(&sq, k).unwrap() != p.neg_power_coeff(k) {
                failures.push(format!("trial {trial}: diagonal trace mismatch at k={k}"));
                break;
            }
        }
    }
    Check::from_failures("minor-sums", instances, failures)
}

/// Pseudo-determinant algebra on random exact instances: agreement with the
/// classical determinant, transpose and similarity invariance, powers,
/// products in either order, block diagonals, pseudo-inverses of normal
/// matrices, nonvanishing, and the diagonal-minor trace identity.
pub fn check_pseudo_det_algebra(seed: u64, instances: usize) -> Check {
    if instances == 0 {
        return Check::skipped("pseudo-det-algebra");
    }
    let mut rng = rng_for(seed, 5);
    let mut failures = Vec::new();
    fn fail(trial: usize, msg: String, failures: &mut Vec<String>) {
        failures.push(format!("trial {trial}: {msg}"));
    }
    for trial in 0..instances {
        let n = rng.gen_range(1..=7usize);

        // invertible: pseudo-determinant is the classical determinant
        let inv = rand_invertible(&mut rng, n, 3);
        let lhs = pseudo_det(&inv).unwrap();
        let rhs = classical_det(&inv).unwrap();
        if lhs != rhs {
            fail(trial, format!("invertible: {lhs} != {rhs}"), &mut failures);
            continue;
        }

        // mixed matrix: transpose invariance and nonvanishing
        let a = rand_mixed_square(&mut rng, n, 3);
        let da = pseudo_det(&a).unwrap();
        if da.is_zero() {
            fail(trial, "pseudo-determinant vanished".into(), &mut failures);
            continue;
        }
        if pseudo_det(&a.transpose()).unwrap() != da {
            fail(trial, "transpose changed the value".into(), &mut failures);
            continue;
        }

        // powers multiply, including the nilpotent case
        let mut power = Matrix::identity(n);
        let mut ok = true;
        for m in 1..=3u32 {
            power = &power * &a;
            if pseudo_det(&power).unwrap() != da.pow(m) {
                fail(trial, format!("power rule failed at m={m}"), &mut failures);
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }

        // A^T B and A B^T carry the same nonzero spectrum
        let b = rand_mixed_square(&mut rng, n, 3);
        let atb = mat_mul(&a.transpose(), &b).unwrap();
        let abt = mat_mul(&a, &b.transpose()).unwrap();
        if pseudo_det(&atb).unwrap() != pseudo_det(&abt).unwrap() {
            fail(trial, "A^T B vs A B^T mismatch".into(), &mut failures);
            continue;
        }
        // and the rectangular version
        let (rr, rc) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let fr = rand_matrix(&mut rng, rr, rc, 3);
        let gr = rand_matrix(&mut rng, rr, rc, 3);
        let d1 = pseudo_det(&mat_mul(&fr.transpose(), &gr).unwrap()).unwrap();
        let d2 = pseudo_det(&mat_mul(&fr, &gr.transpose()).unwrap()).unwrap();
        if d1 != d2 {
            fail(trial, format!("duality: {d1} != {d2}"), &mut failures);
            continue;
        }

        // block diagonal multiplies, with a sometimes-nilpotent block
        let side = rng.gen_range(1..=4);
        let c = if rng.gen_bool(0.4) {
            rand_nilpotent(&mut rng, side, 2)
        } else {
            rand_mixed_square(&mut rng, side, 3)
        };
        let block = Matrix::block_diag(&[&a, &c]);
        if pseudo_det(&block).unwrap() != &da * &pseudo_det(&c).unwrap() {
            fail(trial, "block diagonal product rule failed".into(), &mut failures);
            continue;
        }

        // similarity invariance
        let s = rand_invertible(&mut rng, n, 2);
        let conj = &(&s * &a) * &inverse(&s).unwrap();
        if pseudo_det(&conj).unwrap() != da {
            fail(trial, "similarity changed the value".into(), &mut failures);
            continue;
        }

        // normal matrices: pseudo-inverse inverts the pseudo-determinant
        let sym = if rng.gen_bool(0.5) {
            rand_symmetric(&mut rng, n, 3)
        } else {
            rand_skew(&mut rng, n, 3)
        };
        let ds = pseudo_det(&sym).unwrap();
        let dp = pseudo_det(&pseudo_inverse(&sym)).unwrap();
        if dp != ds.recip() {
            fail(trial, format!("pseudo-inverse: {dp} != 1/{ds}"), &mut failures);
            continue;
        }

        // selfadjoint: spectral count equals rank and the diagonal minor
        // trace at that order recovers the pseudo-determinant
        let k = spectral_count(&sym).unwrap();
        if k != rank(&sym) {
            fail(trial, "selfadjoint spectral count != rank".into(), &mut failures);
            continue;
        }
        if diag_minor_trace(&sym, k).unwrap() != ds {
            fail(trial, "diagonal minor trace missed the value".into(), &mut failures);
        }
    }
    Check::from_failures("pseudo-det-algebra", instances, failures)
}

/// Appending weighted copies of existing rows to F^T and G^T multiplies the
/// pseudo-determinant of the product by 1 + sum(lambda_j mu_j).
pub fn check_append_row_factor(seed: u64, instances: usize) -> Check {
    if instances == 0 {
        return Check::skipped("append-row-factor");
    }
    let mut failures = Vec::new();
    let mut checked = 0;

    // frozen 3x2 instance: factor 7 turns -9 into -63
    checked += 1;
    let f = Matrix::from_int_rows(&[&[1, 1], &[0, 3], &[2, 1]]);
    let g = Matrix::from_int_rows(&[&[1, 2], &[1, 1], &[1, 2]]);
    let ft = f.transpose();
    let gt = g.transpose();
    let base = pseudo_det(&mat_mul(&ft, &g).unwrap()).unwrap();
    let (at, bt) =
        append_parallel_rows(&ft, &gt, 0, &Scalar::from_int(3), &Scalar::from_int(2)).unwrap();
    let after = pseudo_det(&mat_mul(&at, &bt.transpose()).unwrap()).unwrap();
    if base != Scalar::from_int(-9) || after != Scalar::from_int(-63) {
        failures.push(format!("frozen instance: {base} -> {after}, expected -9 -> -63"));
    }
    // crossing the source rows gives factor 1 + 3*0 + 0*2 = 1
    checked += 1;
    let (at, bt) = append_combination_rows(
        &ft,
        &gt,
        &[Scalar::from_int(3), Scalar::zero()],
        &[Scalar::zero(), Scalar::from_int(2)],
    )
    .unwrap();
    let after = pseudo_det(&mat_mul(&at, &bt.transpose()).unwrap()).unwrap();
    if after != Scalar::from_int(-9) {
        failures.push(format!("frozen cross instance: got {after}, expected -9"));
    }

    let mut rng = rng_for(seed, 6);
    for trial in 0..instances {
        checked += 1;
        // full-rank pair with nonsingular F^T G
        let m = rng.gen_range(2..=4usize);
        let n = rng.gen_range(m..=5usize);
        let (f, g) = loop {
            let f = rand_matrix(&mut rng, n, m, 3);
            let g = rand_matrix(&mut rng, n, m, 3);
            let prod = mat_mul(&f.transpose(), &g).unwrap();
            if !classical_det(&prod).unwrap().is_zero() {
                break (f, g);
            }
        };
        let ft = f.transpose();
        let gt = g.transpose();
        let base = pseudo_det(&mat_mul(&ft, &g).unwrap()).unwrap();

        // single parallel row with 1 + lambda*mu != 0
        let (lambda, mu) = loop {
            let l = rng.gen_range(-3..=3i64);
            let u = rng.gen_range(-3..=3i64);
            if 1 + l * u != 0 {
                break (Scalar::from_int(l), Scalar::from_int(u));
            }
        };
        let row = rng.gen_range(0..m);
        let (at, bt) = append_parallel_rows(&ft, &gt, row, &lambda, &mu).unwrap();
        let after = pseudo_det(&mat_mul(&at, &bt.transpose()).unwrap()).unwrap();
        let factor = Scalar::one() + &lambda * &mu;
        if after != &factor * &base {
            failures.push(format!(
                "trial {trial}: single append gave {after}, expected {factor} * {base}"
            ));
            continue;
        }

        // linear combination over l <= 3 rows
        let terms = rng.gen_range(1..=3.min(m));
        let lambdas: Vec<Scalar> = (0..terms)
            .map(|_| Scalar::from_int(rng.gen_range(-2..=2)))
            .collect();
        let mut mus: Vec<Scalar>;
        loop {
            mus = (0..terms)
                .map(|_| Scalar::from_int(rng.gen_range(-2..=2)))
                .collect();
            let dot: Scalar = lambdas.iter().zip(&mus).map(|(l, u)| l * u).sum();
            if !(Scalar::one() + &dot).is_zero() {
                break;
            }
        }
        let dot: Scalar = lambdas.iter().zip(&mus).map(|(l, u)| l * u).sum();
        let (at, bt) = append_combination_rows(&ft, &gt, &lambdas, &mus).unwrap();
        let after = pseudo_det(&mat_mul(&at, &bt.transpose()).unwrap()).unwrap();
        let factor = Scalar::one() + dot;
        if after != &factor * &base {
            failures.push(format!(
                "trial {trial}: combination append gave {after}, expected {factor} * {base}"
            ));
        }
    }
    Check::from_failures("append-row-factor", checked, failures)
}

/// Spanning-tree counts from the Laplacian pseudo-determinant match the
/// brute-force enumeration on the whole corpus; the incidence-minor route
/// agrees on the small members.
pub fn check_spanning_trees(seed: u64, random_graphs: usize) -> Check {
    if random_graphs == 0 {
        return Check::skipped("spanning-tree-counts");
    }
    let corpus = graph_corpus(seed, random_graphs);
    let mut failures = Vec::new();
    let mut checked = 0;
    for (i, g) in corpus.iter().enumerate() {
        if g.edge_count() > 16 {
            continue;
        }
        checked += 1;
        let fast = spanning_tree_count(g).unwrap();
        let brute = Scalar::from_int(brute_force_tree_count(g).unwrap() as i64);
        if fast != brute {
            failures.push(format!(
                "graph {i} ({} vertices, {} edges): {fast} != brute {brute}",
                g.vertex_count(),
                g.edge_count()
            ));
            continue;
        }
        // Laplacian pseudo-determinant through incidence minors
        if g.edge_count() <= 8 {
            let f = g.incidence_matrix();
            let lap = g.scalar_laplacian();
            let via_minors = minor_pair_sum(&f, &f, g.vertex_count() - 1).unwrap();
            if via_minors != pseudo_det(&lap).unwrap() {
                failures.push(format!("graph {i}: incidence minor route disagreed"));
            }
        }
    }
    Check::from_failures("spanning-tree-counts", checked, failures)
}

/// det(1 + L) equals the rooted-forest enumeration on the corpus.
pub fn check_rooted_forests(seed: u64, random_graphs: usize) -> Check {
    if random_graphs == 0 {
        return Check::skipped("rooted-forest-counts");
    }
    let corpus = graph_corpus(seed, random_graphs);
    let mut failures = Vec::new();
    let mut checked = 0;
    for (i, g) in corpus.iter().enumerate() {
        if g.edge_count() > 16 {
            continue;
        }
        checked += 1;
        let fast = rooted_forest_count(g);
        let brute = Scalar::from_int(brute_force_rooted_forest_count(g).unwrap() as i64);
        if fast != brute {
            failures.push(format!(
                "graph {i} ({} vertices, {} edges): {fast} != brute {brute}",
                g.vertex_count(),
                g.edge_count()
            ));
        }
    }
    Check::from_failures("rooted-forest-counts", checked, failures)
}

/// Closed-form pseudo-determinants: cycle Laplacians and the Dirac
/// operators of complete graphs, paths, and cycles.
pub fn check_closed_forms(run: bool) -> Check {
    if !run {
        return Check::skipped("closed-form-families");
    }
    let mut failures = Vec::new();
    let mut checked = 0;

    for n in 3..=12usize {
        checked += 1;
        let det = pseudo_det(&Graph::cycle(n).scalar_laplacian()).unwrap();
        if det != Scalar::from_int((n * n) as i64) {
            failures.push(format!("cycle Laplacian n={n}: {det} != {}", n * n));
        }
    }

    // complete graphs: Det(D) = -n^(2^(n-1) - 1)
    for n in 2..=5usize {
        checked += 1;
        let c = clique_complex(&Graph::complete(n), DEFAULT_SIMPLEX_BUDGET).unwrap();
        let det = pseudo_det(&dirac_operator(&c)).unwrap();
        let expected =
            -Scalar::from_bigint(BigInt::from(n).pow((1u32 << (n - 1)) - 1));
        if det != expected {
            failures.push(format!("complete graph Dirac n={n}: {det} != {expected}"));
        }
    }

    // paths: Det(D) = n * (-1)^(n-1)
    for n in 2..=8usize {
        checked += 1;
        let c = clique_complex(&Graph::path(n), DEFAULT_SIMPLEX_BUDGET).unwrap();
        let det = pseudo_det(&dirac_operator(&c)).unwrap();
        let sign = if n % 2 == 1 { 1 } else { -1 };
        if det != Scalar::from_int(sign * n as i64) {
            failures.push(format!("path Dirac n={n}: {det}"));
        }
    }

    // cycles on the 2n-cell vertex-edge complex: Det(D) = n^2 (-1)^(n-1)
    // and Det(D^2) = n^4
    for n in 3..=8usize {
        checked += 1;
        let c = graph_skeleton(&Graph::cycle(n));
        let d = dirac_operator(&c);
        if d.rows() != 2 * n {
            failures.push(format!("cycle complex n={n}: expected {} cells", 2 * n));
            continue;
        }
        let det = pseudo_det(&d).unwrap();
        let sign = if n % 2 == 1 { 1 } else { -1 };
        if det != Scalar::from_int(sign * (n * n) as i64) {
            failures.push(format!("cycle Dirac n={n}: {det}"));
            continue;
        }
        let det_sq = pseudo_det(&(&d * &d)).unwrap();
        if det_sq != Scalar::from_int((n * n * n * n) as i64) {
            failures.push(format!("cycle Dirac square n={n}: {det_sq}"));
        }
    }

    Check::from_failures("closed-form-families", checked, failures)
}

/// Hodge and Euler-Poincare bookkeeping on the corpus: Betti numbers sum to
/// the kernel dimension of D^2, the alternating sums agree, and the vertex
/// count divides Det(D) for connected graphs.
pub fn check_hodge_euler(seed: u64, random_graphs: usize) -> Check {
    if random_graphs == 0 {
        return Check::skipped("hodge-euler");
    }
    let corpus = graph_corpus(seed, random_graphs);
    let mut failures = Vec::new();
    let mut checked = 0;
    for (i, g) in corpus.iter().enumerate() {
        checked += 1;
        let c = match clique_complex(g, DEFAULT_SIMPLEX_BUDGET) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("graph {i}: {e}"));
                continue;
            }
        };
        let betti = betti_numbers(&c);
        let total: usize = betti.by_degree.iter().sum();
        if total != betti.laplacian_kernel_dim {
            failures.push(format!(
                "graph {i}: Betti sum {total} != kernel dim {}",
                betti.laplacian_kernel_dim
            ));
            continue;
        }
        let (lhs, rhs) = euler_characteristic_check(&c);
        if lhs != rhs {
            failures.push(format!("graph {i}: Euler sums {lhs} != {rhs}"));
            continue;
        }
        if g.is_connected() {
            let det = pseudo_det(&dirac_operator(&c)).unwrap();
            let n = BigInt::from(g.vertex_count());
            if !det.is_integer() || !(det.numer() % &n).is_zero() {
                failures.push(format!(
                    "graph {i}: Det(D) = {det} not divisible by {}",
                    g.vertex_count()
                ));
            }
        }
    }
    Check::from_failures("hodge-euler", checked, failures)
}

/// Numeric backend: squared pseudo-Pfaffians against exact
/// pseudo-determinants, pinned eigenvalues, eigenvalue counts against
/// spectral counts, the volume reading, and the log-trace identity.
pub fn check_numeric_backend(seed: u64, skew_matrices: usize) -> Check {
    if skew_matrices == 0 {
        return Check::skipped("numeric-backend");
    }
    let mut rng = rng_for(seed, 7);
    let mut failures = Vec::new();
    let mut checked = 0;

    // pinned eigenvalues 0, 3 +- 5 sqrt(2)
    checked += 1;
    let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
    let s = symmetric_eigenvalues(&a).unwrap();
    let expected = [3.0 - 5.0 * 2f64.sqrt(), 0.0, 3.0 + 5.0 * 2f64.sqrt()];
    if s.eigenvalues
        .iter()
        .zip(expected)
        .any(|(got, want)| (got - want).abs() > 1e-9)
    {
        failures.push(format!("pinned spectrum: {:?}", s.eigenvalues));
    }
    checked += 1;
    let (lhs, rhs) = volume_check(&a).unwrap();
    if (lhs - rhs).abs() > 1e-9 * rhs.abs().max(1.0) {
        failures.push(format!("volume reading: {lhs} vs {rhs}"));
    }

    for trial in 0..skew_matrices {
        checked += 1;
        let n = rng.gen_range(2..=8usize);
        let a = rand_skew_mixed_rank(&mut rng, n, 2);
        let det = pseudo_det(&a).unwrap().to_f64();
        match pseudo_pfaffian_abs(&a) {
            Ok(pf) => {
                let lhs = pf * pf;
                let rhs = det.abs();
                if (lhs - rhs).abs() > 1e-8 * rhs.max(1.0) {
                    failures.push(format!("trial {trial}: Pf^2 = {lhs} vs |Det| = {rhs}"));
                }
            }
            Err(e) => failures.push(format!("trial {trial}: {e}")),
        }
    }

    let symmetric_trials = (skew_matrices / 4).max(5);
    for trial in 0..symmetric_trials {
        checked += 1;
        let n = rng.gen_range(1..=8usize);
        let a = if rng.gen_bool(0.3) {
            // guaranteed singular symmetric: B^T D B with low rank
            let r = rng.gen_range(0..n);
            let b = rand_matrix(&mut rng, r, n, 2);
            let mut d = Matrix::zeros(r, r);
            for i in 0..r {
                d[(i, i)] = Scalar::from_int(rng.gen_range(-2..=2));
            }
            &(&b.transpose() * &d) * &b
        } else {
            rand_symmetric(&mut rng, n, 3)
        };
        let (lhs, rhs) = log_trace_check(&a).unwrap();
        if (lhs - rhs).abs() > 1e-6 {
            failures.push(format!("trial {trial}: log-trace {lhs} vs {rhs}"));
            continue;
        }
        let s = symmetric_eigenvalues(&a).unwrap();
        let count = nonzero_eigenvalue_count(&s, frobenius_norm(&a));
        if count != spectral_count(&a).unwrap() {
            failures.push(format!(
                "trial {trial}: numeric count {count} != spectral count {}",
                spectral_count(&a).unwrap()
            ));
        }
    }
    Check::from_failures("numeric-backend", checked, failures)
}

/// Runs every suite with one seed and budget.
pub fn run_full_suite(seed: u64, budget: &SuiteBudget) -> Vec<Check> {
    let any = budget.coefficient_pairs > 0;
    vec![
        if any {
            check_known_values()
        } else {
            Check::skipped("known-values")
        },
        check_exact_core(seed, budget.core_instances),
        check_coefficient_identity(seed, budget.coefficient_pairs),
        check_exterior_multiplicativity(seed, budget.multiplicativity_pairs),
        check_minor_sums(seed, budget.minor_property_instances),
        check_pseudo_det_algebra(seed, budget.algebra_instances),
        check_append_row_factor(seed, budget.append_instances),
        check_spanning_trees(seed, budget.random_graphs),
        check_rooted_forests(seed, budget.random_graphs),
        check_closed_forms(any),
        check_hodge_euler(seed, budget.random_graphs),
        check_numeric_backend(seed, budget.skew_matrices),
    ]
}
