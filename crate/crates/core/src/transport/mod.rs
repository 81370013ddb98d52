//! Real and integral transportation classes under a subgroup of D4.

mod fill;
mod integral;

pub use fill::{greedy_integral, marker_matrices, proportional_fill, MarkerTriple};
pub(crate) use fill::{greedy, markers};

use crate::error::{Error, Result};
use crate::margins::partition::{is_palindromic, odd_count, reversed};
use crate::margins::{MarginPair, Scalar};
use crate::oracle;
use crate::report::{Condition, Decision, FeasibilityReport, MatrixClass};
use crate::symmetry::{DenseMatrix, SubgroupId};


/// Decides nonemptiness of `T^H(R,S)` (Real) or `T^H_Z(R,S)` (Integral) and
/// attaches a verified witness when nonempty.
pub fn feasible(p: &MarginPair, h: SubgroupId, c: MatrixClass) -> Result<FeasibilityReport> {
    check_shape(p, h)?;
    let (theorem, conditions, decision) = evaluate(p, h, c)?;
    let witness = if decision.is_feasible() { Some(build(p, h, c)?) } else { None };
    Ok(FeasibilityReport { subgroup: h, class: c, theorem, decision, conditions, witness })
}

/// Builds a witness, failing with [`Error::Infeasible`] when the governing
/// conditions do not hold.
pub fn construct(p: &MarginPair, h: SubgroupId, c: MatrixClass) -> Result<DenseMatrix<Scalar>> {
    check_shape(p, h)?;
    let (_, conditions, decision) = evaluate(p, h, c)?;
    if !decision.is_feasible() {
        let failed: Vec<&str> = conditions.iter().filter(|c| !c.holds).map(|c| c.label).collect();
        return Err(Error::Infeasible(failed.join(", ")));
    }
    build(p, h, c)
}

pub(crate) fn check_shape(p: &MarginPair, h: SubgroupId) -> Result<()> {
    if h.requires_square() && p.m() != p.n() {
        return Err(Error::NotSquare { subgroup: h, m: p.m(), n: p.n() });
    }
    Ok(())
}

type Evaluation = (&'static str, Vec<Condition>, Decision);

fn evaluate(p: &MarginPair, h: SubgroupId, c: MatrixClass) -> Result<Evaluation> {
    match c {
        MatrixClass::Real => Ok(evaluate_real(p, h)),
        MatrixClass::Integral => {
            let (r, s) = p.to_integers()?;
            Ok(evaluate_integral(&r, &s, h))
        }
        MatrixClass::ZeroOne => Err(Error::UnknownName { kind: "transport class", name: c.to_string() }),
    }
}

fn all_hold(conditions: &[Condition]) -> Decision {
    Decision::from_bool(conditions.iter().all(|c| c.holds))
}

fn palindrome<T: PartialEq>(label: &'static str, v: &[T], name: &str) -> Condition {
    let holds = is_palindromic(v);
    Condition::new(label, holds, if holds { String::new() } else { format!("{name} differs from its reversal") })
}

fn equal<T: PartialEq>(label: &'static str, a: &[T], b: &[T], what: &str) -> Condition {
    let holds = a == b;
    Condition::new(label, holds, if holds { String::new() } else { format!("{what} fails") })
}

fn real_conditions<T: PartialEq + Clone>(r: &[T], s: &[T], h: SubgroupId) -> (&'static str, Vec<Condition>) {
    use SubgroupId::*;
    match h {
        Trivial => ("T", vec![Condition::new("T.sums", true, "")]),
        Rot180 => ("T^pi", vec![palindrome("Tpi.R", r, "R"), palindrome("Tpi.S", s, "S")]),
        Diag => ("T^-1", vec![equal("Tm1.a", r, s, "R = S")]),
        Antidiag => ("T^+1", vec![equal("Tp1.a", s, &reversed(r), "S = reverse(R)")]),
        Times => ("T^x", vec![equal("Ttimes.a", r, s, "R = S"), palindrome("Ttimes.b", r, "R")]),
        ReflV => ("T^infty", vec![palindrome("Tinfty.a", s, "S")]),
        ReflH => ("T^0", vec![palindrome("T0.a", r, "R")]),
        Plus => ("T^+", vec![palindrome("Tinfty.a", s, "S"), palindrome("T0.a", r, "R")]),
        Rot90 => ("T^pi/2", vec![equal("Tpi2.a", r, s, "R = S"), palindrome("Tpi2.b", r, "R")]),
        Full => ("T^4", vec![equal("T4.a", r, s, "R = S"), palindrome("T4.b", r, "R")]),
    }
}

fn evaluate_real(p: &MarginPair, h: SubgroupId) -> Evaluation {
    let (theorem, conditions) = real_conditions(p.rows().entries(), p.cols().entries(), h);
    let decision = all_hold(&conditions);
    (theorem, conditions, decision)
}

/// `n` even: every entry of `v` even; `n` odd: the central entry of `w`
/// is at least `o(v)`.
fn central_parity(label: &'static str, v: &[i64], w: &[i64]) -> Condition {
    let n = w.len();
    if n % 2 == 0 {
        let odd = odd_count(v);
        Condition::new(label, odd == 0, if odd == 0 { String::new() } else { format!("{odd} odd entries with even length") })
    } else {
        let (center, odd) = (w[n / 2], odd_count(v) as i64);
        Condition::new(label, center >= odd, format!("central entry {center}, odd count {odd}"))
    }
}

fn evaluate_integral(r: &[i64], s: &[i64], h: SubgroupId) -> Evaluation {
    use SubgroupId::*;
    let (_, mut conditions) = real_conditions(r, s, h);
    let n = s.len();
    let theorem = match h {
        Trivial => "T_Z",
        Rot180 => "T^pi_Z",
        Diag => "T^-1_Z",
        Antidiag => "T^+1_Z",
        Times => "T^x_Z",
        ReflV => {
            conditions.push(central_parity("Tinfty.b", r, s));
            "T^infty_Z"
        }
        ReflH => {
            conditions.push(central_parity("T0.b", s, r));
            "T^0_Z"
        }
        Plus => {
            conditions.insert(1, central_parity("Tinfty.b", r, s));
            conditions.push(central_parity("T0.b", s, r));
            "T^+_Z"
        }
        Rot90 => {
            let top: i64 = r[..n / 2].iter().sum();
            conditions.push(Condition::new("Tpi2.c", top % 2 == 0, format!("top-half sum {top}")));
            let d = n % 2 == 1 && r[n / 2] >= 2;
            let detail = if n % 2 == 1 { format!("central entry {}", r[n / 2]) } else { "n even".to_string() };
            conditions.push(Condition::new("Tpi2.d", d, detail));
            let holds = |l: &str| conditions.iter().any(|c| c.label == l && c.holds);
            let decision = Decision::from_bool(holds("Tpi2.a") && holds("Tpi2.b") && (holds("Tpi2.c") || holds("Tpi2.d")));
            return ("T^pi/2_Z", conditions, decision);
        }
        Full => {
            conditions.push(central_parity("T4.c", r, r));
            "T^4_Z"
        }
    };
    let decision = all_hold(&conditions);
    (theorem, conditions, decision)
}

fn build(p: &MarginPair, h: SubgroupId, c: MatrixClass) -> Result<DenseMatrix<Scalar>> {
    let a = match c {
        MatrixClass::Real => build_real(p, h),
        _ => {
            let (r, s) = p.to_integers()?;
            build_integral(&r, &s, h).to_scalar()
        }
    };
    let report = oracle::verify(&a, p, h, c);
    if !report.pass() {
        return Err(Error::WitnessRejected(format!("{h} {c}: {report}")));
    }
    Ok(a)
}

fn build_real(p: &MarginPair, h: SubgroupId) -> DenseMatrix<Scalar> {
    use SubgroupId::*;
    let r = p.rows().entries();
    let n = r.len();
    match h {
        Diag => DenseMatrix::from_fn(n, n, |i, j| if i == j { r[i].clone() } else { Scalar::zero() }),
        Antidiag => DenseMatrix::from_fn(n, n, |i, j| if i + j + 1 == n { r[i].clone() } else { Scalar::zero() }),
        Times | Full => {
            let mut a = DenseMatrix::zeros(n, n);
            for i in 0..n {
                *a.get_mut(i, i) += &r[i].half();
                *a.get_mut(i, n - 1 - i) += &r[i].half();
            }
            a
        }
        Trivial | Rot180 | ReflV | ReflH | Plus | Rot90 => proportional_fill(p),
    }
}

fn build_integral(r: &[i64], s: &[i64], h: SubgroupId) -> DenseMatrix<i64> {
    use SubgroupId::*;
    match h {
        Trivial => greedy(r, s),
        Rot180 => integral::centrosymmetric(r, s),
        Diag => integral::diagonal(r),
        Antidiag => integral::antidiagonal(r),
        Times => integral::diag_plus_antidiag(r),
        ReflV => integral::vertical_mirror(r, s),
        ReflH => integral::vertical_mirror(s, r).transpose(),
        Plus => integral::axis_mirror(r, s),
        Rot90 => integral::quarter_turn(r),
        Full => integral::full_symmetric(r),
    }
}
