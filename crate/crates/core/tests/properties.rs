//! Algebraic laws and cross-checks, run as proptest properties or exhaustively
//! where the space is small.

use dihedral_core::margins::partition::{conjugate, is_palindromic, majorizes, odd_count, reversed, sorted_desc};
use dihedral_core::oracle::{enumerate, sweep_with, SweepConfig};
use dihedral_core::transport::proportional_fill;
use dihedral_core::zeroone::{clean_diagonal, split_symmetric};
use dihedral_core::{
    solve, DenseMatrix, Decision, MarginPair, MarginVector, MatrixClass, MirrorPermutation, SubgroupId,
    Symmetry,
};
use proptest::prelude::*;

fn matrix(max_dim: usize, max_entry: i64) -> impl Strategy<Value = DenseMatrix<i64>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(m, n)| {
        prop::collection::vec(0..=max_entry, m * n)
            .prop_map(move |v| DenseMatrix::from_fn(m, n, |i, j| v[i * n + j]))
    })
}

fn square(max_dim: usize, max_entry: i64) -> impl Strategy<Value = DenseMatrix<i64>> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(0..=max_entry, n * n).prop_map(move |v| DenseMatrix::from_fn(n, n, |i, j| v[i * n + j]))
    })
}

fn palindrome(max_len: usize, max_entry: i64) -> impl Strategy<Value = Vec<i64>> {
    (1..=max_len).prop_flat_map(move |n| {
        prop::collection::vec(0..=max_entry, n.div_ceil(2)).prop_map(move |half| {
            (0..n).map(|i| half[i.min(n - 1 - i)]).collect()
        })
    })
}

fn margins(a: &DenseMatrix<i64>) -> MarginPair {
    MarginPair::from_integers(&a.row_sums(), &a.col_sums()).unwrap()
}

fn invariant_by_elements(a: &DenseMatrix<i64>, h: SubgroupId) -> bool {
    h.elements().into_iter().all(|g| a.apply(g) == *a)
}

/// Every matrix with entries in `0..=cap`, visited by odometer.
fn every_matrix(m: usize, n: usize, cap: i64, mut f: impl FnMut(&DenseMatrix<i64>) -> bool) -> bool {
    let mut cells = vec![0; m * n];
    loop {
        if f(&DenseMatrix::from_fn(m, n, |i, j| cells[i * n + j])) {
            return true;
        }
        let Some(k) = cells.iter().position(|&x| x < cap) else { return false };
        cells[k] += 1;
        cells[..k].iter_mut().for_each(|x| *x = 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_action_law(a in square(5, 9)) {
        for g in Symmetry::ALL {
            prop_assert_eq!(a.apply(g.inverse()).apply(g), a.clone());
            for h in Symmetry::ALL {
                prop_assert_eq!(a.apply(h).apply(g), a.apply(g.compose(h)));
            }
        }
    }

    #[test]
    fn rectangular_action_law(a in matrix(5, 9)) {
        for g in Symmetry::ALL {
            prop_assert_eq!(a.apply(g.inverse()).apply(g), a.clone());
            for h in Symmetry::ALL {
                prop_assert_eq!(a.apply(h).apply(g), a.apply(g.compose(h)));
            }
        }
    }

    #[test]
    fn margin_transport(a in matrix(5, 9)) {
        prop_assert_eq!(a.apply(Symmetry::Rot180).row_sums(), reversed(&a.row_sums()));
        prop_assert_eq!(a.apply(Symmetry::ReflV).col_sums(), reversed(&a.col_sums()));
        prop_assert_eq!(a.apply(Symmetry::ReflD).row_sums(), a.col_sums());
    }

    #[test]
    fn generators_decide_invariance(a in square(4, 1)) {
        for h in SubgroupId::ALL {
            prop_assert_eq!(a.is_invariant(h).unwrap(), invariant_by_elements(&a, h));
        }
    }

    #[test]
    fn double_conjugate(v in prop::collection::vec(0i64..8, 0..8)) {
        let mut want = sorted_desc(&v);
        want.retain(|&x| x > 0);
        prop_assert_eq!(conjugate(&conjugate(&v)), want);
    }

    #[test]
    fn majorization_reflexive_and_transitive(a in prop::collection::vec(0i64..5, 4), b in prop::collection::vec(0i64..5, 4), c in prop::collection::vec(0i64..5, 4)) {
        prop_assert!(majorizes(&a, &a));
        let sums = [&a, &b, &c].map(|v| v.iter().sum::<i64>());
        if sums[0] == sums[1] && sums[1] == sums[2] && majorizes(&a, &b) && majorizes(&b, &c) {
            prop_assert!(majorizes(&a, &c));
        }
    }

    #[test]
    fn palindromes_survive_normalization(v in prop::collection::vec(0i64..6, 0..9)) {
        let mv = MarginVector::from_integers(&v).unwrap();
        prop_assert_eq!(mv.reverse().reverse(), mv.clone());
        let sigma = MirrorPermutation::sorting(&v);
        prop_assert_eq!(sigma.inverse().apply(&sigma.apply(&v)), v.clone());
        match mv.normalize_initially_nonincreasing() {
            Ok((w, sigma)) => {
                prop_assert!(is_palindromic(&v));
                prop_assert!(w.is_palindromic());
                prop_assert_eq!(sigma.inverse().apply(w.entries()), mv.entries().to_vec());
            }
            Err(_) => prop_assert!(!is_palindromic(&v)),
        }
    }

    #[test]
    fn odd_count_parity(v in prop::collection::vec(0i64..20, 0..10)) {
        prop_assert_eq!(odd_count(&v) as i64 % 2, v.iter().sum::<i64>() % 2);
    }

    #[test]
    fn proportional_fill_keeps_symmetry(r in palindrome(6, 9), s in palindrome(6, 9)) {
        let (tr, ts): (i64, i64) = (r.iter().sum(), s.iter().sum());
        prop_assume!(tr > 0 && ts > 0);
        // scale so the totals agree: R·ΣS and S·ΣR
        let r2: Vec<i64> = r.iter().map(|x| x * ts).collect();
        let s2: Vec<i64> = s.iter().map(|x| x * tr).collect();
        let p = MarginPair::from_integers(&r2, &s2).unwrap();
        let t = proportional_fill(&p);
        prop_assert!(t.is_invariant(SubgroupId::Rot180).unwrap());
        prop_assert!(t.apply(Symmetry::ReflV) == t);

        let q = MarginPair::from_integers(&r, &r).unwrap();
        prop_assert!(proportional_fill(&q).is_invariant(SubgroupId::Rot90).unwrap());
    }

    #[test]
    fn plus_is_both_axes(a in matrix(4, 3), class in prop::sample::select(vec![MatrixClass::Real, MatrixClass::Integral])) {
        let p = margins(&a);
        let plus = solve(&p, SubgroupId::Plus, class).unwrap().is_feasible();
        let v = solve(&p, SubgroupId::ReflV, class).unwrap().is_feasible();
        let h = solve(&p, SubgroupId::ReflH, class).unwrap().is_feasible();
        prop_assert_eq!(plus, v && h);
    }

    #[test]
    fn classes_are_monotone(a in square(4, 1), h in prop::sample::select(SubgroupId::ALL.to_vec())) {
        let p = margins(&a);
        let decide = |c| solve(&p, h, c).unwrap().is_feasible();
        let (zero_one, integral, real) = (decide(MatrixClass::ZeroOne), decide(MatrixClass::Integral), decide(MatrixClass::Real));
        prop_assert!(!zero_one || integral);
        prop_assert!(!integral || real);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Orbit enumeration against every matrix of the grid.
    #[test]
    fn enumeration_matches_full_grid(
        (m, n) in (1usize..=4, 1usize..=4).prop_filter("at most 12 cells", |(m, n)| m * n <= 12),
        seed in prop::collection::vec(0i64..=4, 8),
        h in prop::sample::select(SubgroupId::ALL.to_vec()),
        zero_one in any::<bool>(),
    ) {
        let (m, n) = if h.requires_square() { (m.min(n), m.min(n)) } else { (m, n) };
        let (class, cap) = if zero_one || m * n > 8 { (MatrixClass::ZeroOne, 1) } else { (MatrixClass::Integral, 2) };
        let r: Vec<i64> = (0..m).map(|i| seed[i] % (cap * n as i64 + 1)).collect();
        let total: i64 = r.iter().sum();
        let mut s = vec![0; n];
        let mut left = total;
        for (j, x) in s.iter_mut().enumerate() {
            let take = left.min(seed[4 + j % 4]).min(cap * m as i64);
            *x = if j + 1 == n { left } else { take };
            left -= *x;
        }
        let p = MarginPair::from_integers(&r, &s).unwrap();
        let found = enumerate(&p, h, class, Some(cap)).unwrap();
        let brute = every_matrix(m, n, cap, |a| {
            a.row_sums() == r && a.col_sums() == s && invariant_by_elements(a, h)
        });
        prop_assert_eq!(found.is_some(), brute);
    }
}

#[test]
fn conjugation_is_antitone() {
    fn partitions(t: i64, cap: i64) -> Vec<Vec<i64>> {
        if t == 0 {
            return vec![Vec::new()];
        }
        (1..=cap.min(t))
            .rev()
            .flat_map(|first| partitions(t - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            }))
            .collect()
    }
    for t in 0..=12 {
        let parts = partitions(t, t);
        for a in &parts {
            for b in &parts {
                assert_eq!(majorizes(a, b), majorizes(&conjugate(b), &conjugate(a)), "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn clean_and_split_exhaustively() {
    for n in 1..=4 {
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let count = 3usize.pow(cells.len() as u32);
        for code in 0..count {
            let mut m = DenseMatrix::zeros(n, n);
            let mut c = code;
            for &(i, j) in &cells {
                let v = (c % 3) as i64;
                c /= 3;
                m.set(i, j, v);
                m.set(j, i, v);
            }
            let ones = (0..n).filter(|&i| *m.get(i, i) == 1).count();
            let cleaned = clean_diagonal(&m);
            if ones % 2 == 1 {
                assert!(cleaned.is_err());
                continue;
            }
            let cleaned = cleaned.unwrap();
            assert_eq!(cleaned.row_sums(), m.row_sums());
            assert!((0..n).all(|i| *cleaned.get(i, i) != 1));
            let p = split_symmetric(&cleaned).unwrap();
            assert!(p.entries().iter().all(|&x| x == 0 || x == 1));
            let t = p.transpose();
            assert_eq!(DenseMatrix::from_fn(n, n, |i, j| p.get(i, j) + t.get(i, j)), cleaned);
        }
    }
}

#[test]
fn refl_v_fixes_the_parity_column() {
    for n in [1, 3, 5] {
        for m in 1..=3 {
            every_matrix(m, n, 1, |a| {
                if invariant_by_elements(a, SubgroupId::ReflV) {
                    let parity: Vec<i64> = a.row_sums().iter().map(|x| x % 2).collect();
                    let centre: Vec<i64> = (0..m).map(|i| *a.get(i, n / 2)).collect();
                    assert_eq!(centre, parity);
                }
                false
            });
        }
    }
}

fn faulty(p: &MarginPair, h: SubgroupId, c: MatrixClass) -> dihedral_core::Result<dihedral_core::FeasibilityReport> {
    let mut r = solve(p, h, c)?;
    if h == SubgroupId::Times {
        r.decision = Decision::from_bool(!r.is_feasible());
        r.witness = None;
    }
    Ok(r)
}

#[test]
fn sweep_notices_a_broken_decider() {
    let cfg = SweepConfig { max_m: 3, max_n: 3, max_total: 4, ..SweepConfig::default() };
    let report = sweep_with(&cfg, faulty);
    assert!(!report.discrepancies.is_empty());
    assert!(report.discrepancies.iter().all(|d| d.subgroup == SubgroupId::Times));
}

#[test]
fn sweeps_are_schedule_independent() {
    let run = |jobs| {
        let cfg = SweepConfig {
            max_m: 3,
            max_n: 3,
            max_total: 5,
            classes: vec![MatrixClass::ZeroOne, MatrixClass::Integral],
            jobs,
            ..SweepConfig::default()
        };
        let r = sweep_with(&cfg, faulty);
        let lines: Vec<String> = r.discrepancies.iter().map(|d| d.to_string()).collect();
        (r.checks, r.feasible, lines)
    };
    let one = run(1);
    assert!(!one.2.is_empty());
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}

#[test]
fn quarter_turn_parity_example() {
    let p = MarginPair::from_integers(&[2, 2, 2], &[2, 2, 2]).unwrap();
    assert!(!solve(&p, SubgroupId::Rot90, MatrixClass::ZeroOne).unwrap().is_feasible());
    assert!(enumerate(&p, SubgroupId::Rot90, MatrixClass::ZeroOne, None).unwrap().is_none());
}

#[test]
fn centrosymmetric_example_is_not_times_invariant() {
    let m0 = DenseMatrix::from_rows(vec![vec![0, 0, 1, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 1, 0, 0]]).unwrap();
    let p = margins(&m0);
    let m0 = m0.to_scalar();
    assert!(dihedral_core::oracle::verify(&m0, &p, SubgroupId::Rot180, MatrixClass::ZeroOne).pass());
    let v = dihedral_core::oracle::verify(&m0, &p, SubgroupId::Times, MatrixClass::ZeroOne);
    assert!(!v.invariant_ok && v.margins_ok);
}
