mod oracle;

use proptest::prelude::*;
use yangmul::matrix::disjoint;
use yangmul::search::{search_bs_pruned, SearchSpec};
use yangmul::seq::bs_verify_inferred;
use yangmul::yang::{
    compose_with_matrices, factorization_sides, hall_identity_sides, interleaved_factorization_sides, qrst_interleaved,
    qrst_interleaved_octuple, qrst_raw, qrst_summands, Octuple,
};
use yangmul::{yang_compose, BaseSeqQuad, IntMat, LaurentPoly1, LaurentPoly2, Seq};

fn pm1_of_len(len: usize) -> impl Strategy<Value = Seq> {
    prop::collection::vec(prop_oneof![Just(1i64), Just(-1i64)], len).prop_map(|v| Seq::new(v).unwrap())
}

/// `+-1` octuple; `a..d` of length `n`, `e..h` of length `m`, both in `1..=6`.
fn raw_octuple() -> impl Strategy<Value = Octuple> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(n, m)| {
        (
            prop::array::uniform4(pm1_of_len(n)),
            prop::array::uniform4(pm1_of_len(m)),
        )
            .prop_map(|([a, b, c, d], [e, f, g, h])| Octuple { a, b, c, d, e, f, g, h })
    })
}

/// `+-1` octuple of shape `(n+1, n+1, n, n)` / `(m+1, m+1, m, m)`.
fn adjacent_octuple() -> impl Strategy<Value = Octuple> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| {
        (
            pm1_of_len(n + 1),
            pm1_of_len(n + 1),
            pm1_of_len(n),
            pm1_of_len(n),
            pm1_of_len(m + 1),
            pm1_of_len(m + 1),
            pm1_of_len(m),
            pm1_of_len(m),
        )
            .prop_map(|(a, b, c, d, f, g, h, e)| Octuple { a, b, c, d, e, f, g, h })
    })
}

fn mat_rows(m: &IntMat) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

proptest! {
    #[test]
    fn raw_factorization_identity(oct in raw_octuple()) {
        let (lhs, rhs) = factorization_sides(&oct).unwrap();
        prop_assert_eq!(&lhs, &rhs);

        // Same left-hand side through the naive expansion.
        let raw = qrst_raw(&oct).unwrap();
        let oracle_lhs = raw.mats().iter().fold(Vec::new(), |acc, m| {
            let p = oracle::psi2(&mat_rows(m));
            oracle::add(&acc, &oracle::mul(&p, &oracle::star(&p)))
        });
        prop_assert!(oracle::matches(&lhs, &oracle_lhs));
    }

    #[test]
    fn psi_of_q_expands(oct in raw_octuple()) {
        let raw = qrst_raw(&oct).unwrap();
        let x = |s: &Seq| s.psi().in_x();
        let y = |s: &Seq| s.psi().in_y();
        let expected = x(&oct.a) * y(&oct.f).star() + x(&oct.c) * y(&oct.g)
            - x(&oct.b).star() * y(&oct.e) + x(&oct.d) * y(&oct.h);
        prop_assert_eq!(raw.q.psi2(), expected);
        let expected_t = x(&oct.b) * y(&oct.g) - x(&oct.d) * y(&oct.f)
            + x(&oct.a) * y(&oct.h).star() + x(&oct.c).star() * y(&oct.e);
        prop_assert_eq!(raw.t.psi2(), expected_t);
    }

    #[test]
    fn interleaved_structure(oct in adjacent_octuple()) {
        let mats = qrst_interleaved_octuple(&oct).unwrap();
        let (n, m) = (oct.c.len(), oct.h.len());
        for x in mats.mats() {
            prop_assert_eq!(x.shape(), (2 * m + 1, 2 * n + 1));
            prop_assert!(x.is_pm1());
            prop_assert_eq!(x.support().len(), (2 * m + 1) * (2 * n + 1));
        }
        let summands = qrst_summands(&oct.interleaved().unwrap()).unwrap();
        for parts in &summands {
            for i in 0..4 {
                for j in (i + 1)..4 {
                    prop_assert!(disjoint(&parts[i].product, &parts[j].product).unwrap());
                }
            }
            let union: usize = parts.iter().map(|p| p.product.support().len()).sum();
            prop_assert_eq!(union, (2 * m + 1) * (2 * n + 1));
        }
    }

    #[test]
    fn interleaved_two_variable_identity(oct in adjacent_octuple()) {
        let mats = qrst_interleaved_octuple(&oct).unwrap();
        let (lhs, rhs) = interleaved_factorization_sides(&oct, &mats).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn collapse_at_row_width(oct in adjacent_octuple()) {
        let mats = qrst_interleaved_octuple(&oct).unwrap();
        let width = (2 * oct.c.len() + 1) as i64;
        for x in mats.mats() {
            prop_assert_eq!(x.flatten().psi(), x.psi2().collapse(width).unwrap());
        }
    }

    #[test]
    fn hall_identity_holds_unconditionally_at_grid_width(oct in adjacent_octuple()) {
        let mats = qrst_interleaved_octuple(&oct).unwrap();
        let flat = mats.flatten();
        let step = 2 * (2 * oct.c.len() as i64 + 1);
        let (lhs, rhs) = hall_identity_sides(&oct, flat.each_ref(), step).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_deterministic(oct in adjacent_octuple()) {
        let first = qrst_interleaved_octuple(&oct).unwrap();
        let second = qrst_interleaved_octuple(&oct.clone()).unwrap();
        prop_assert_eq!(first, second);
    }
}

fn all_bs(k: usize) -> Vec<BaseSeqQuad> {
    search_bs_pruned(&SearchSpec::new(k + 1, k)).unwrap()
}

#[test]
fn theorem_holds_for_every_small_pair() {
    for n in 1..=2 {
        for m in 1..=2 {
            let xs = all_bs(n);
            let ys = all_bs(m);
            // A spread of pairs keeps the runtime modest in debug builds.
            for bs1 in xs.iter().step_by(7) {
                for bs2 in ys.iter().step_by(11) {
                    let (out, mats) = compose_with_matrices(bs1, bs2).unwrap();
                    let len = (2 * m + 1) * (2 * n + 1);
                    assert_eq!((out.m(), out.n()), (len, len));
                    assert_eq!(out.weight(), 4 * len as i64);
                    let expected = (2 * (2 * n + 1) * 2 * (2 * m + 1)) as i64;
                    assert_eq!(mats.raw().norm_sum().unwrap(), LaurentPoly2::constant(expected));
                    let psi_total = out
                        .refs()
                        .iter()
                        .fold(LaurentPoly1::zero(), |acc, s| acc + s.psi() * s.psi().star());
                    assert_eq!(psi_total, LaurentPoly1::constant(4 * len as i64));
                    for q in out.refs() {
                        assert!(q.is_pm1());
                    }
                    let sums: Vec<i64> = (1..len)
                        .map(|j| out.refs().iter().map(|s| oracle::npaf(s.entries())[j]).sum())
                        .collect();
                    assert!(sums.iter().all(|&v| v == 0));
                }
            }
        }
    }
}

#[test]
fn bs21_by_bs32_has_rectangular_grid() {
    let bs21 = bs_verify_inferred("++".parse().unwrap(), "+-".parse().unwrap(), "+".parse().unwrap(), "+".parse().unwrap()).unwrap();
    let bs32 = all_bs(2).into_iter().next().unwrap();
    let mats = qrst_interleaved(&bs21, &bs32).unwrap();
    assert_eq!(mats.q().shape(), (5, 3));
    let out = yang_compose(&bs21, &bs32).unwrap();
    assert_eq!(out.m(), 15);
    let swapped = yang_compose(&bs32, &bs21).unwrap();
    assert_eq!(swapped.m(), 15);
}
