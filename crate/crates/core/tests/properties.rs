use proptest::prelude::*;

use schubert_torus::action;
use schubert_torus::poly::{RationalFunction, Substitution};
use schubert_torus::rational::q;
use schubert_torus::schubert::{has_semistable, inversion_array, tau_r, to_permutation, GrassmannElement};
use schubert_torus::weights::{
    act, fundamental_weight, minuscule_floor_element, minuscule_floor_element_with, pairing, RoundingMode,
    TieBreak, Weight,
};
use schubert_torus::weyl::{bruhat_leq, is_min_coset_rep, Permutation, SimpleSet};

/// A permutation of 1..=n from a shuffle seed.
fn perm(n: usize, picks: &[usize]) -> Permutation {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut line = Vec::with_capacity(n);
    for (i, p) in picks.iter().take(n).enumerate() {
        line.push(pool.remove(p % (n - i)));
    }
    Permutation::from_one_line(&line).unwrap()
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(any::<usize>(), n).prop_map(move |v| perm(n, &v)))
}

/// (n, r) with 1 ≤ r < n.
fn arb_nr(max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (2..=max_n).prop_flat_map(|n| (Just(n), 1..n))
}

fn arb_cell(max_n: usize) -> impl Strategy<Value = GrassmannElement> {
    arb_nr(max_n).prop_flat_map(|(n, r)| {
        let cells = GrassmannElement::all(n, r).unwrap();
        prop::sample::select(cells)
    })
}

fn arb_semistable_cell(max_n: usize) -> impl Strategy<Value = GrassmannElement> {
    (4..=max_n)
        .prop_flat_map(|n| (Just(n), 2..=n - 2))
        .prop_flat_map(|(n, r)| {
            let cells: Vec<GrassmannElement> = GrassmannElement::all(n, r)
                .unwrap()
                .into_iter()
                .filter(|g| has_semistable(g).unwrap())
                .collect();
            prop::sample::select(cells)
        })
}

fn omega_r(n: usize, r: usize) -> Weight {
    fundamental_weight(r, n).unwrap()
}

/// ⟨χ, e_a - e_b⟩ for the coroot e_a - e_b.
fn pair_with_difference(chi: &Weight, a: usize, b: usize) -> schubert_torus::rational::Q {
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    let s = (lo..hi).map(|k| pairing(chi, k).unwrap()).fold(q(0), |acc, x| acc + x);
    s * q(sign)
}

fn head(w: &Permutation, r: usize) -> Vec<usize> {
    w.one_line()[..r].to_vec()
}

fn gale_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inverse_cancels(w in arb_perm(7)) {
        prop_assert!(w.compose(&w.inverse()).unwrap().is_identity());
        prop_assert!(w.inverse().compose(&w).unwrap().is_identity());
    }

    #[test]
    fn reduced_word_multiplies_back(w in arb_perm(6)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(w.n(), &word).unwrap(), w);
    }

    #[test]
    fn length_additive_order_implies_subword_order(u in arb_perm(5), seed in prop::collection::vec(any::<usize>(), 5)) {
        let w = perm(u.n(), &seed);
        if bruhat_leq(&u, &w).unwrap() {
            prop_assert!(schubert_torus::weyl::classical_bruhat_leq(&u, &w).unwrap());
        }
    }

    #[test]
    fn pairing_is_transported_by_the_action(
        w in arb_perm(6),
        coeffs in prop::collection::vec(-20i64..20, 6),
        j in 1usize..6,
    ) {
        let n = w.n();
        prop_assume!(n >= 2 && j < n);
        let chi = Weight::from_ints(&coeffs[..n - 1]);
        let moved = act(&w, &chi).unwrap();
        let inv = w.inverse();
        prop_assert_eq!(pairing(&moved, j).unwrap(), pair_with_difference(&chi, inv.apply(j), inv.apply(j + 1)));
    }

    #[test]
    fn fundamental_weight_drops_by_word_roots(g in arb_cell(6)) {
        let (n, r) = (g.n(), g.r());
        let w = to_permutation(&g);
        let mut expected = omega_r(n, r);
        for i in w.reduced_word() {
            expected = &expected - &Weight::simple_root(n - 1, i);
        }
        prop_assert_eq!(act(&w, &omega_r(n, r)).unwrap(), expected);
    }

    #[test]
    fn dominant_orbit_map_is_injective(
        n in 2usize..=5,
        c in prop::collection::vec(0i64..3, 4),
        a in prop::collection::vec(any::<usize>(), 5),
        b in prop::collection::vec(any::<usize>(), 5),
    ) {
        let c = &c[..n - 1];
        let mut lambda = Weight::zero(n - 1);
        for (r, &k) in c.iter().enumerate() {
            lambda = &lambda + &omega_r(n, r + 1).scale(&q(k));
        }
        let set: SimpleSet = (1..n).filter(|&j| c[j - 1] == 0).collect();
        let (u, v) = (perm(n, &a), perm(n, &b));
        prop_assume!(is_min_coset_rep(&u, &set) && is_min_coset_rep(&v, &set) && u != v);
        prop_assert_ne!(act(&u, &lambda).unwrap(), act(&v, &lambda).unwrap());
    }

    #[test]
    fn order_reversal(
        (n, r) in arb_nr(6),
        a in prop::collection::vec(any::<usize>(), 6),
        b in prop::collection::vec(any::<usize>(), 6),
    ) {
        prop_assume!(r <= 3);
        let (t, s) = (perm(n, &a), perm(n, &b));
        let set = schubert_torus::weyl::maximal_parabolic(n, r);
        prop_assume!(is_min_coset_rep(&t, &set) && is_min_coset_rep(&s, &set));
        let omega = omega_r(n, r);
        let lhs = act(&t, &omega).unwrap().leq(&act(&s, &omega).unwrap());
        prop_assert_eq!(lhs, bruhat_leq(&s, &t).unwrap());
        prop_assert_eq!(lhs, gale_leq(&head(&s, r), &head(&t, r)));
    }

    #[test]
    fn extremal_elements_bound_signed_images(g in arb_cell(6)) {
        let (n, r) = (g.n(), g.r());
        let sigma = to_permutation(&g);
        let omega = omega_r(n, r);
        let img = act(&sigma, &omega.scale(&q(n as i64))).unwrap();
        if img.is_nonpositive() {
            let ceil = minuscule_floor_element(&omega, RoundingMode::Ceil).unwrap();
            prop_assert!(bruhat_leq(&ceil, &sigma).unwrap());
        }
        if img.is_nonnegative() {
            let floor = minuscule_floor_element(&omega, RoundingMode::Floor).unwrap();
            prop_assert!(bruhat_leq(&sigma, &floor).unwrap());
        }
    }

    #[test]
    fn descent_tie_break_does_not_matter((n, r) in arb_nr(7), ceil in any::<bool>()) {
        let mode = if ceil { RoundingMode::Ceil } else { RoundingMode::Floor };
        let omega = omega_r(n, r);
        prop_assert_eq!(
            minuscule_floor_element_with(&omega, mode, TieBreak::Smallest).unwrap(),
            minuscule_floor_element_with(&omega, mode, TieBreak::Largest).unwrap()
        );
    }

    #[test]
    fn tau_r_bounds_the_nonpositive_cells(g in arb_cell(6)) {
        let (n, r) = (g.n(), g.r());
        let w = to_permutation(&g);
        prop_assume!(act(&w, &omega_r(n, r).scale(&q(n as i64))).unwrap().is_nonpositive());
        let tau = to_permutation(&tau_r(n, r).unwrap());
        let dual = minuscule_floor_element(&omega_r(n, n - r), RoundingMode::Floor).unwrap();
        prop_assert!(bruhat_leq(&tau, &w).unwrap());
        prop_assert!(bruhat_leq(&w.compose(&tau.inverse()).unwrap(), &dual.inverse()).unwrap());
    }

    #[test]
    fn semistable_inversions_are_sum_free(g in arb_semistable_cell(7)) {
        prop_assert!(inversion_array(&g).is_sum_free());
    }
}

fn x_sub(k: usize, g: &GrassmannElement) -> Substitution {
    action::x_action(k, g).unwrap()
}

fn word(ks: &[usize], g: &GrassmannElement) -> Substitution {
    ks.iter().skip(1).fold(x_sub(ks[0], g), |acc, &k| acc.then(&x_sub(k, g)).unwrap())
}

fn same(a: &Substitution, b: &Substitution) -> bool {
    a.normalized() == b.normalized()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generators_are_involutions(g in arb_semistable_cell(6)) {
        for k in action::stabilizer_generators(&g) {
            prop_assert!(word(&[k, k], &g).is_identity(), "s_{} on {:?}", k, g.a_seq());
        }
    }

    #[test]
    fn braid_relations(g in arb_semistable_cell(6)) {
        let stab: Vec<usize> = action::stabilizer_generators(&g).into_iter().collect();
        for &k in &stab {
            for &l in stab.iter().filter(|&&l| l > k) {
                if l == k + 1 {
                    prop_assert!(same(&word(&[k, l, k], &g), &word(&[l, k, l], &g)), "{} {} on {:?}", k, l, g.a_seq());
                } else {
                    prop_assert!(same(&word(&[k, l], &g), &word(&[l, k], &g)), "{} {} on {:?}", k, l, g.a_seq());
                }
            }
        }
    }

    #[test]
    fn invariant_monomials_stay_invariant(
        g in arb_semistable_cell(6),
        exps in prop::collection::vec(-2i64..=2, 12),
    ) {
        let ys = action::y_indices(&g);
        let mut f = RationalFunction::one();
        for ((i, j), e) in ys.iter().zip(&exps) {
            f = f.mul(&action::y_in_x(&g, *i, *j).unwrap().pow(*e).unwrap());
        }
        for k in action::stabilizer_generators(&g) {
            let image = f.substitute(&x_sub(k, &g)).unwrap();
            prop_assert!(action::reexpress_in_y(&image, &g).is_ok(), "s_{} on {:?}", k, g.a_seq());
        }
    }
}
