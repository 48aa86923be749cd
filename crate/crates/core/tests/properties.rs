mod common;

use proptest::prelude::*;
use springer_cells::cellgeom::{verify_canonical, verify_springer};
use springer_cells::closure::{chi_embed, chi_split, closure_decomposition, subset_arcs, valid_splits};
use springer_cells::cutting::{cut_set, labeled_cut_ordered, piece_params};
use springer_cells::exactalg::{canonical_reduce, is_canonical, is_invertible, q, qf, same_flag, Field, Ring};
use springer_cells::matchcore::{bt_word, word_to_matching};
use springer_cells::{build_template, instantiate, labeled_cut, BTWord, Fp, JordanType, Label, Matrix, Poly, Q};

use common::*;

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| qf(n, d))
}

/// A Jordan type and a word of it, N ≤ `max_n`.
fn word(max_n: usize) -> impl Strategy<Value = (JordanType, String)> {
    (2..=max_n)
        .prop_flat_map(|nn| (Just(nn), 1..nn))
        .prop_flat_map(|(nn, n)| {
            let all = words(n, nn);
            (Just(jt(n, nn)), proptest::sample::select(all))
        })
}

fn with_params(max_n: usize) -> impl Strategy<Value = (JordanType, String, Vec<Q>)> {
    word(max_n).prop_flat_map(|(t, w)| {
        let k = word_arcs(&w).len();
        (Just(t), Just(w), proptest::collection::vec(rational(), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn word_roundtrip((t, w) in word(14)) {
        let m = word_to_matching(&w.parse::<BTWord>().unwrap());
        prop_assert_eq!(pairs(&m), word_arcs(&w));
        prop_assert_eq!(bt_word(&m, &t).unwrap().to_string(), w);
        prop_assert!(m.is_noncrossing() && m.is_standard());
        prop_assert!(m.len() <= t.n.min(t.big_n - t.n));
    }

    #[test]
    fn instantiated_cells_are_springer_flags((t, w, v) in with_params(8)) {
        let m = word_to_matching(&w.parse::<BTWord>().unwrap());
        let ct = build_template(&m, &t).unwrap();
        let g = instantiate(&ct, &v).unwrap();
        prop_assert!(verify_canonical(&g) && verify_springer(&g, &t).unwrap());
        prop_assert!(canonical(&g) && x_stable(&g, t.n));
        prop_assert_eq!(pivot_rows(&g), word_rows(&w, t.n));
    }

    #[test]
    fn canonical_reduce_is_a_projection(rows in (2usize..=5).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(rational(), n), n))) {
        let g = Matrix::from_rows(rows);
        prop_assume!(is_invertible(&g));
        let c = canonical_reduce(&g).unwrap();
        prop_assert!(is_canonical(&c) && canonical(&c));
        prop_assert_eq!(canonical_reduce(&c).unwrap(), c.clone());
        prop_assert!(same_flag(&g, &c));
    }

    #[test]
    fn cutting_matches_letter_swap((t, w) in word(10), mask in any::<u64>(), seed in any::<u64>()) {
        let m = word_to_matching(&w.parse::<BTWord>().unwrap());
        let a_set = subset_arcs(&m, (mask as usize) & ((1 << m.len()) - 1));
        let mut order = a_set.clone();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let base = cut_set(&m, &order, &t).unwrap();
        prop_assert_eq!(pairs(&base), cut_by_swap(t.big_n, t.n, &pairs(&m), &pairs_of(&a_set)));
        let p = labeled_cut(&m, &a_set, &t).unwrap();
        prop_assert_eq!(&p.base, &base);
        prop_assert_eq!(p.dim(), m.len() - a_set.len());
        if let Ok(other) = labeled_cut_ordered(&m, &order, &t) {
            prop_assert_eq!(other, p);
        }
    }

    #[test]
    fn pieces_are_cells_of_their_base((t, w) in word(8), u in proptest::collection::vec(rational(), 8)) {
        let m = word_to_matching(&w.parse::<BTWord>().unwrap());
        let dec = closure_decomposition(&m, &t).unwrap();
        for p in &dec.pieces {
            let v = piece_params(p, &u[..p.remaining().len()]).unwrap();
            for (l, x) in p.labels.iter().zip(&v) {
                if *l == Label::Zero {
                    prop_assert!(Ring::is_zero(x));
                }
            }
            let g = instantiate(&build_template(&p.base, &t).unwrap(), &v).unwrap();
            prop_assert!(canonical(&g) && x_stable(&g, t.n));
        }
    }

    #[test]
    fn split_square_commutes((t, w, v) in with_params(8)) {
        let m = word_to_matching(&w.parse::<BTWord>().unwrap());
        let ct = build_template(&m, &t).unwrap();
        let g = instantiate(&ct, &v).unwrap();
        for i in valid_splits(&m) {
            let s = chi_split(&m, &t, i).unwrap();
            let k = s.m_left.len();
            let gl = instantiate(&build_template(&s.m_left, &s.jt_left).unwrap(), &v[..k]).unwrap();
            let gr = instantiate(&build_template(&s.m_right, &s.jt_right).unwrap(), &v[k..]).unwrap();
            prop_assert_eq!(chi_embed(&gl, &gr, &s).unwrap(), g.clone());
        }
    }

    #[test]
    fn poly_division(a in proptest::collection::vec(rational(), 0..6), b in proptest::collection::vec(rational(), 1..4)) {
        let (a, b) = (Poly::new(a), Poly::new(b));
        prop_assume!(b.degree().is_some());
        let (quo, rem) = a.div_rem(&b);
        prop_assert_eq!(quo * b.clone() + rem.clone(), a);
        prop_assert!(rem.degree().map_or(true, |d| d < b.degree().unwrap()));
    }

    #[test]
    fn prime_field_inverses(x in 1i64..1000) {
        for v in [Fp::<2>::new(x), Fp::<2>::new(x + 1)] {
            if let Some(i) = v.inv() {
                prop_assert_eq!(v * i, Fp::<2>::one());
            }
        }
        let y = Fp::<5>::new(x);
        prop_assert_eq!(y.inv().is_some(), x % 5 != 0);
        if let Some(i) = y.inv() {
            prop_assert_eq!(y * i, Fp::<5>::one());
        }
        let z = Fp::<3>::new(-x);
        prop_assert_eq!((z + Fp::<3>::new(x)).value(), 0);
    }
}

#[test]
fn empty_matching_is_the_identity() {
    let t = jt(2, 4);
    let ct = build_template(&word_to_matching(&"TTBB".parse().unwrap()), &t).unwrap();
    let g: Matrix<Q> = instantiate(&ct, &[]).unwrap();
    assert_eq!(g, Matrix::identity(4));
    assert_eq!(g[(0, 0)], q(1));
}
