//! (0,1) classes under a subgroup of D4.

mod centro;
mod flow;
mod gale_ryser;
mod symmetric;

pub use centro::{centro_reduce, ReducedPair, ReductionStep};
pub use gale_ryser::{gale_ryser_construct, gale_ryser_feasible};
pub use symmetric::{
    clean_diagonal, split_symmetric, symmetric_012_construct, symmetric_012_feasible, symmetric_01_construct,
};
pub(crate) use symmetric::{sym01, sym012};

use crate::error::{Error, Result};
use crate::margins::partition::{
    conjugate, is_palindromic, majorization_failure, majorizes, odd_count, order_desc, reversed, sorted_desc,
    symmetric_012_realizable,
};
use crate::margins::{MarginPair, MirrorPermutation, Scalar};
use crate::oracle;
use crate::report::{Condition, Decision, FeasibilityReport, MatrixClass};
use crate::symmetry::{fill_orbit, DenseMatrix, Symmetry, SubgroupId};
use crate::transport::markers;

/// Decides nonemptiness of `A^H(R,S)` and attaches a verified witness.
pub fn feasible01(p: &MarginPair, h: SubgroupId) -> Result<FeasibilityReport> {
    crate::transport::check_shape(p, h)?;
    let (r, s) = p.zero_one_margins()?;
    let (theorem, conditions, decision) = evaluate(&r, &s, h);
    let witness = if decision.is_feasible() { Some(build(p, &r, &s, h)?) } else { None };
    Ok(FeasibilityReport { subgroup: h, class: MatrixClass::ZeroOne, theorem, decision, conditions, witness })
}

/// Builds a verified witness or fails with [`Error::Infeasible`].
pub fn construct01(p: &MarginPair, h: SubgroupId) -> Result<DenseMatrix<Scalar>> {
    crate::transport::check_shape(p, h)?;
    let (r, s) = p.zero_one_margins()?;
    let (_, conditions, decision) = evaluate(&r, &s, h);
    if !decision.is_feasible() {
        let failed: Vec<&str> = conditions.iter().filter(|c| !c.holds).map(|c| c.label).collect();
        return Err(Error::Infeasible(failed.join(", ")));
    }
    build(p, &r, &s, h)
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// `dominant` majorizes `other`; on failure the detail names the first bad
/// prefix or the total mismatch.
fn dominance(label: &'static str, dominant: &[i64], other: &[i64], names: (&str, &str)) -> Condition {
    let holds = majorizes(dominant, other);
    let (a, b) = (sorted_desc(dominant), sorted_desc(other));
    let mut detail = format!("{}={} vs {}={}", names.0, tuple(&a), names.1, tuple(&b));
    if !holds {
        match majorization_failure(&a, &b) {
            Some(k) => {
                let pa: i64 = a.iter().take(k).sum();
                let pb: i64 = b.iter().take(k).sum();
                detail += &format!(": fails at prefix {k}: {pb} > {pa}");
            }
            None => {
                let (ta, tb): (i64, i64) = (a.iter().sum(), b.iter().sum());
                detail += &format!(": totals differ ({ta} vs {tb})");
            }
        }
    }
    Condition::new(label, holds, detail)
}

fn palindrome(label: &'static str, v: &[i64], name: &str) -> Condition {
    let holds = is_palindromic(v);
    Condition::new(label, holds, if holds { String::new() } else { format!("{name}={} is not palindromic", tuple(v)) })
}

fn equal(label: &'static str, a: &[i64], b: &[i64], what: &str) -> Condition {
    let holds = a == b;
    Condition::new(label, holds, if holds { String::new() } else { format!("{what} fails") })
}

/// `n` even: `v` even. `n` odd: central entry of `w` at least `o(v)`.
fn central_parity(label: &'static str, v: &[i64], w: &[i64]) -> Condition {
    let n = w.len();
    let odd = odd_count(v) as i64;
    if n % 2 == 0 {
        Condition::new(label, odd == 0, format!("{odd} odd entries, even length"))
    } else {
        Condition::new(label, w[n / 2] >= odd, format!("central entry {}, odd count {odd}", w[n / 2]))
    }
}

/// Subtract one from odd entries.
fn even_part(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| x - x.rem_euclid(2)).collect()
}

fn without_center(v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    if v.len() % 2 == 1 {
        v.remove(v.len() / 2);
    }
    v
}

fn floor_half_top(v: &[i64]) -> Vec<i64> {
    v[..v.len() / 2].iter().map(|x| x / 2).collect()
}

type Evaluation = (&'static str, Vec<Condition>, Decision);

fn all_hold(conditions: &[Condition]) -> Decision {
    Decision::from_bool(conditions.iter().all(|c| c.holds))
}

/// Conditions for the centrosymmetric class: palindromes, reduction, and
/// Gale–Ryser on the reduced pair.
fn centro_conditions(r: &[i64], s: &[i64]) -> Vec<Condition> {
    let mut out = vec![palindrome("Api.R", r, "R"), palindrome("Api.S", s, "S")];
    if !(is_palindromic(r) && is_palindromic(s)) {
        out.push(Condition::new("Api.reduce", false, "requires palindromic margins"));
        out.push(Condition::new("Api.gr", false, "requires palindromic margins"));
        return out;
    }
    match centro::reduce(r, s) {
        Ok((rr, ss, _)) => {
            out.push(Condition::new("Api.reduce", true, format!("R'={} S'={}", tuple(&rr), tuple(&ss))));
            out.push(dominance("Api.gr", &conjugate(&rr), &ss, ("R'*", "S'")));
        }
        Err(e) => {
            out.push(Condition::new("Api.reduce", false, e.to_string()));
            out.push(Condition::new("Api.gr", false, "reduction failed"));
        }
    }
    out
}

/// The vertical-mirror conditions; `labels` lets the horizontal case reuse
/// them on the transposed problem.
fn mirror_conditions(r: &[i64], s: &[i64], labels: [&'static str; 3]) -> Vec<Condition> {
    let (rbar, sbar) = (even_part(r), without_center(s));
    vec![
        palindrome(labels[0], s, "mirrored margin"),
        central_parity(labels[1], r, s),
        dominance(labels[2], &conjugate(&rbar), &sbar, ("conjugate(R-bar)", "S-bar")),
    ]
}

/// `R̄` for the quarter-turn class in normalized order. When the central ones
/// do not fit in the top half a trailing `-1` is pushed, so every later
/// check on `R̄` fails.
fn quarter_turn_rbar(r: &[i64]) -> (Vec<i64>, MirrorPermutation) {
    let n = r.len();
    let sigma = MirrorPermutation::sorting(r);
    let sorted = sigma.apply(r);
    let mut rbar = sorted[..n / 2].to_vec();
    if n % 2 == 1 {
        let s = (sorted[n / 2] / 2) as usize;
        for (i, x) in rbar.iter_mut().enumerate() {
            if i < s {
                *x -= 1;
            }
        }
        if s > rbar.len() {
            rbar.push(-1);
        }
    }
    (rbar, sigma)
}

fn evaluate(r: &[i64], s: &[i64], h: SubgroupId) -> Evaluation {
    use SubgroupId::*;
    let n = s.len();
    let (theorem, conditions) = match h {
        Trivial => ("A", vec![dominance("A.gr", &conjugate(r), s, ("R*", "S"))]),
        Rot180 => ("A^pi", centro_conditions(r, s)),
        Diag => (
            "A^-1",
            vec![equal("Am1.a", r, s, "R = S"), dominance("Am1.b", &conjugate(r), r, ("R*", "R"))],
        ),
        Antidiag => {
            let rr = reversed(r);
            (
                "A^+1",
                vec![equal("Ap1.a", s, &rr, "S = reverse(R)"), dominance("Ap1.b", &conjugate(r), &rr, ("R*", "reverse(R)"))],
            )
        }
        Times => {
            let pi = centro_conditions(r, r).iter().all(|c| c.holds);
            (
                "A^x",
                vec![
                    equal("Atimes.a", r, s, "R = S"),
                    palindrome("Atimes.b", r, "R"),
                    Condition::new("Atimes.pi", pi, if pi { "" } else { "A^pi(R,R) is empty" }),
                ],
            )
        }
        ReflV => ("A^infty", mirror_conditions(r, s, ["Ainfty.a", "Ainfty.b", "Ainfty.c"])),
        ReflH => ("A^0", mirror_conditions(s, r, ["A0.a", "A0.b", "A0.c"])),
        Plus => {
            let (m, n) = (r.len(), s.len());
            let mut c_holds = true;
            let mut c_detail = Vec::new();
            if n % 2 == 1 {
                let (o, sc) = (odd_count(r) as i64, s[n / 2]);
                c_holds &= o == sc;
                c_detail.push(format!("o(R)={o}, s_c={sc}"));
            }
            if m % 2 == 1 {
                let (o, rc) = (odd_count(s) as i64, r[m / 2]);
                c_holds &= o == rc;
                c_detail.push(format!("o(S)={o}, r_c={rc}"));
            }
            let (rv, sv) = (floor_half_top(r), floor_half_top(s));
            (
                "A^+",
                vec![
                    palindrome("Tinfty.a", s, "S"),
                    central_parity("Tinfty.b", r, s),
                    palindrome("T0.a", r, "R"),
                    central_parity("T0.b", s, r),
                    Condition::new("Aplus.c", c_holds, c_detail.join("; ")),
                    dominance("Aplus.d", &conjugate(&rv), &sv, ("conjugate(R-check)", "S-check")),
                ],
            )
        }
        Rot90 => {
            let top: i64 = r[..n / 2].iter().sum();
            let (rbar, _) = quarter_turn_rbar(r);
            let nonneg = rbar.iter().all(|&x| x >= 0);
            let total: i64 = rbar.iter().sum();
            let conditions = vec![
                equal("Api2.a", r, s, "R = S"),
                palindrome("Api2.b", r, "R"),
                Condition::new("Api2.c", top % 2 == 0, format!("top-half sum {top}")),
                Condition::new("Api2.d", n % 2 == 1 && r[n / 2] >= 2, if n % 2 == 1 { format!("central entry {}", r[n / 2]) } else { "n even".into() }),
                Condition::new("Api2.rbar", nonneg, format!("R-bar={}", tuple(&rbar))),
                Condition::new("Api2.parity", total % 2 == 0, format!("sum {total}")),
                Condition::new("Api2.sym", nonneg && symmetric_012_realizable(&rbar), format!("R-bar={}", tuple(&rbar))),
            ];
            let holds = |l: &str| conditions.iter().any(|c| c.label == l && c.holds);
            let decision = Decision::from_bool(
                ["Api2.a", "Api2.b", "Api2.rbar", "Api2.parity", "Api2.sym"].iter().all(|l| holds(l))
                    && (holds("Api2.c") || holds("Api2.d")),
            );
            return ("A^pi/2", conditions, decision);
        }
        Full => {
            let c = if n % 2 == 0 {
                let odd = odd_count(r);
                Condition::new("A4.c", odd == 0, format!("{odd} odd entries, even length"))
            } else {
                let (o, rc) = (odd_count(r) as i64, r[n / 2]);
                Condition::new("A4.c", o == rc, format!("o(R)={o}, r_c={rc}"))
            };
            let rv = floor_half_top(r);
            (
                "A^4",
                vec![
                    equal("A4.a", r, s, "R = S"),
                    palindrome("A4.b", r, "R"),
                    c,
                    dominance("A4.d", &conjugate(&rv), &rv, ("conjugate(R-check)", "R-check")),
                ],
            )
        }
    };
    let decision = all_hold(&conditions);
    (theorem, conditions, decision)
}

fn build(p: &MarginPair, r: &[i64], s: &[i64], h: SubgroupId) -> Result<DenseMatrix<Scalar>> {
    let a = witness(r, s, h)
        .ok_or_else(|| Error::WitnessRejected(format!("{h} zero-one: construction failed for {p}")))?
        .to_scalar();
    let report = oracle::verify(&a, p, h, MatrixClass::ZeroOne);
    if !report.pass() {
        return Err(Error::WitnessRejected(format!("{h} zero-one: {report}")));
    }
    Ok(a)
}

fn witness(r: &[i64], s: &[i64], h: SubgroupId) -> Option<DenseMatrix<i64>> {
    use SubgroupId::*;
    match h {
        Trivial => gale_ryser::construct(r, s),
        Rot180 => centrosymmetric(r, s),
        Diag => sym01(r),
        Antidiag => sym01(&reversed(r)).map(|a| a.apply(Symmetry::Rot90)),
        Times => times(r),
        ReflV => vertical_mirror(r, s),
        ReflH => vertical_mirror(s, r).map(|a| a.transpose()),
        Plus => axis_mirror(r, s),
        Rot90 => quarter_turn(r),
        Full => full(r),
    }
}

fn centrosymmetric(r: &[i64], s: &[i64]) -> Option<DenseMatrix<i64>> {
    let (rr, ss, trace) = centro::reduce(r, s).ok()?;
    let base = flow::centrosymmetric_even(&rr, &ss)?;
    Some(centro::lift(&trace, &base))
}

/// Block form over the top-left quarter: `X + E = M` with `M` a symmetric
/// (0,1,2) matrix on the top-half margins less the central-column ones.
/// `X` fills the orbit of `(i, j)` and `E` the orbit of `(i, n-1-j)`.
fn times(r: &[i64]) -> Option<DenseMatrix<i64>> {
    let n = r.len();
    let h = n / 2;
    let top = &r[..h];
    let mut a = DenseMatrix::zeros(n, n);
    let residual = if n % 2 == 1 {
        let k = (r[h] / 2) as usize;
        let order = order_desc(top);
        if k > h {
            return None;
        }
        let chosen = first_realizable_column(top, &order, k)?;
        for &i in &chosen {
            fill_orbit(&mut a, SubgroupId::Times, i, h, 1);
        }
        a.set(h, h, r[h] % 2);
        let mut res = top.to_vec();
        chosen.iter().for_each(|&i| res[i] -= 1);
        res
    } else {
        top.to_vec()
    };
    let m = sym012(&residual)?;
    for i in 0..h {
        for j in 0..h {
            let v = *m.get(i, j);
            if v >= 1 {
                fill_orbit(&mut a, SubgroupId::Times, i, j, 1);
            }
            if v == 2 {
                fill_orbit(&mut a, SubgroupId::Times, i, n - 1 - j, 1);
            }
        }
    }
    Some(a)
}

/// First `k`-subset of `order` (lexicographic) leaving a nonnegative,
/// Brualdi–Ryser realizable residual.
fn first_realizable_column(top: &[i64], order: &[usize], k: usize) -> Option<Vec<usize>> {
    fn go(top: &mut Vec<i64>, order: &[usize], from: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
        if k == 0 {
            return symmetric_012_realizable(top);
        }
        for t in from..order.len() {
            if order.len() - t < k {
                break;
            }
            let i = order[t];
            if top[i] == 0 {
                continue;
            }
            top[i] -= 1;
            chosen.push(i);
            if go(top, order, t + 1, k - 1, chosen) {
                return true;
            }
            chosen.pop();
            top[i] += 1;
        }
        false
    }
    let mut work = top.to_vec();
    let mut chosen = Vec::new();
    go(&mut work, order, 0, k, &mut chosen).then_some(chosen)
}

/// `[B | refl_v(B)]` with a parity column in the middle when `n` is odd.
fn vertical_mirror(r: &[i64], s: &[i64]) -> Option<DenseMatrix<i64>> {
    let (m, n) = (r.len(), s.len());
    let h = n / 2;
    let half: Vec<i64> = even_part(r).iter().map(|x| x / 2).collect();
    let b = gale_ryser::construct(&half, &s[..h])?;
    let mut a = DenseMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..h {
            a.set(i, j, *b.get(i, j));
            a.set(i, n - 1 - j, *b.get(i, j));
        }
        if n % 2 == 1 {
            a.set(i, h, r[i] % 2);
        }
    }
    Some(a)
}

/// Quarter block from Gale–Ryser on the floor-halved top margins, parity
/// entries on the central row and column, and the central cell last.
fn axis_mirror(r: &[i64], s: &[i64]) -> Option<DenseMatrix<i64>> {
    let (m, n) = (r.len(), s.len());
    let (hm, hn) = (m / 2, n / 2);
    let q = gale_ryser::construct(&floor_half_top(r), &floor_half_top(s))?;
    let mut a = DenseMatrix::zeros(m, n);
    for i in 0..hm {
        for j in 0..hn {
            fill_orbit(&mut a, SubgroupId::Plus, i, j, *q.get(i, j));
        }
    }
    if n % 2 == 1 {
        for i in 0..hm {
            fill_orbit(&mut a, SubgroupId::Plus, i, hn, r[i] % 2);
        }
    }
    if m % 2 == 1 {
        for j in 0..hn {
            fill_orbit(&mut a, SubgroupId::Plus, hm, j, s[j] % 2);
        }
    }
    if m % 2 == 1 && n % 2 == 1 {
        let c: i64 = s[..hn].iter().map(|x| x % 2).sum();
        let center = r[hm] - 2 * c;
        if !(0..=1).contains(&center) {
            return None;
        }
        a.set(hm, hn, center);
    }
    Some(a)
}

/// Built in normalized order: `M` on `R̄`, diagonal cleanup, `M = B + Bᵗ`,
/// the central column carries its ones at the top, then un-permute.
fn quarter_turn(r: &[i64]) -> Option<DenseMatrix<i64>> {
    let n = r.len();
    let h = n / 2;
    let (rbar, sigma) = quarter_turn_rbar(r);
    let m = clean_diagonal(&sym012(&rbar)?).ok()?;
    let b = split_symmetric(&m).ok()?;
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..h {
        for j in 0..h {
            fill_orbit(&mut a, SubgroupId::Rot90, i, j, *b.get(i, j));
        }
    }
    if n % 2 == 1 {
        let center = sigma.apply(r)[h];
        let s = (center / 2) as usize;
        for i in 0..s.min(h) {
            fill_orbit(&mut a, SubgroupId::Rot90, i, h, 1);
        }
        a.set(h, h, center % 2);
    }
    let inv = sigma.inverse();
    Some(inv.permute_rows(&inv.permute_cols(&a)))
}

/// Symmetric quarter `B` on the floor-halved top margins, spread over the
/// full orbits, plus the parity marker when `n` is odd.
fn full(r: &[i64]) -> Option<DenseMatrix<i64>> {
    let n = r.len();
    let h = n / 2;
    let b = sym01(&floor_half_top(r))?;
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..h {
        for j in 0..h {
            fill_orbit(&mut a, SubgroupId::Full, i, j, *b.get(i, j));
        }
    }
    a.add_assign(&markers(r, r).a_plus);
    Some(a)
}
