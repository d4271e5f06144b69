use proptest::prelude::*;

use weylphi::elliptic::{d_c_classical, excellent_decomposition, validate_excellent, w_from_partition, ClassicalType, Variant};
use weylphi::field::{Field, F1009, F5};
use weylphi::isometry::{jordan_type, predicted_jordan_type, rel_position, rel_position_by_dimensions, w_p, FormKind, FormedSpace};
use weylphi::matrix::Matrix;
use weylphi::partition::{dominance_leq, psi, Partition};
use weylphi::weyl::classes::ClassLabel;
use weylphi::weyl::{Family, WeylElement, WeylGroup};

/// Random partition of a random n in 1..=max.
fn partition(max: u32) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn partition_of(n: u32) -> impl Strategy<Value = Partition> {
    let all = Partition::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// Product of random root elements and Weyl lifts: an isometry.
fn random_isometry<F: Field>(space: &FormedSpace<F>, word: &[(usize, u64, bool)]) -> Matrix<F> {
    let mut g = Matrix::identity(space.dim());
    for &(h, a, lift) in word {
        let h = 1 + h % space.n();
        let step = if lift { space.sdot(h) } else { space.y(h, &F::nth(a)) };
        g = &g * &step;
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_reverses_dominance(a in partition_of(8), b in partition_of(8)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.conjugate().size(), a.size());
        let fwd = dominance_leq(&a, &b).unwrap();
        let back = dominance_leq(&b.conjugate(), &a.conjugate()).unwrap();
        prop_assert_eq!(fwd, back);
    }

    #[test]
    fn psi_sums_to_kappa(p in partition(14)) {
        let s = psi(&p);
        prop_assert_eq!(s.get(1), 1);
        prop_assert_eq!(s.sum(), p.kappa() as i32);
    }

    #[test]
    fn classical_labels_roundtrip(a in partition(4), b in partition(4), empty_a in any::<bool>()) {
        let positive = if empty_a { Partition::empty() } else { a };
        let l = ClassLabel::Classical { positive, negative: b, split: None };
        let text = l.to_string();
        prop_assert_eq!(ClassLabel::parse(&text, Family::C).unwrap(), l.clone());
        let paren = format!("({})", text.replace(['[', ']'], ""));
        prop_assert_eq!(ClassLabel::parse(&paren, Family::B).unwrap(), l);
    }

    #[test]
    fn excellent_words_have_length_d_c(p in partition(7)) {
        let n = p.size() as usize;
        let g = WeylGroup::of(Family::C, n.max(2)).unwrap();
        prop_assume!(n >= 2);
        let dec = excellent_decomposition(&p, ClassicalType::C, Variant::A).unwrap();
        let w = WeylElement::Perm(w_from_partition(&p, 0).inverse());
        let rep = validate_excellent(&dec, &w, &g).unwrap();
        prop_assert!(rep.passed());
        prop_assert_eq!(rep.length, d_c_classical(&p, ClassicalType::C).unwrap());
    }

    /// Jordan type of u_w does not depend on the nonzero constants.
    #[test]
    fn u_w_jordan_type_is_constant(p in partition(5), cs in prop::collection::vec(1u64..1009, 5), odd in any::<bool>()) {
        let n = p.size() as usize;
        let space = if odd { FormedSpace::<F1009>::orthogonal(n, 1) } else { FormedSpace::<F1009>::symplectic(n) };
        let c: Vec<F1009> = cs[..n].iter().map(|&x| F1009::nth(x)).collect();
        let u = space.u_w(&p, &c).unwrap();
        prop_assert!(space.is_isometry(&u));
        let kind = if odd { FormKind::Orthogonal } else { FormKind::Symplectic };
        prop_assert_eq!(jordan_type(&u).unwrap(), predicted_jordan_type(&p, kind, odd as usize, 0));
        let f0 = space.standard_flag();
        let pos = rel_position(&f0, &f0.transform(&u)).unwrap();
        prop_assert_eq!(pos, w_p(&p, odd as usize).inverse());
    }

    /// a_{gV, gV'} = a_{V, V'} and the fast routine agrees with the definition.
    #[test]
    fn relative_position_is_invariant(
        w1 in prop::collection::vec((0usize..3, 1u64..5, any::<bool>()), 1..8),
        w2 in prop::collection::vec((0usize..3, 1u64..5, any::<bool>()), 1..8),
        odd in any::<bool>(),
    ) {
        let space = if odd { FormedSpace::<F5>::orthogonal(3, 1) } else { FormedSpace::<F5>::symplectic(3) };
        let f0 = space.standard_flag();
        let h = random_isometry(&space, &w1);
        let g = random_isometry(&space, &w2);
        prop_assert!(space.is_isometry(&g) && space.is_isometry(&h));
        let f1 = f0.transform(&h);
        let before = rel_position(&f0, &f1).unwrap();
        prop_assert_eq!(&before, &rel_position_by_dimensions(&f0, &f1));
        let after = rel_position(&f0.transform(&g), &f1.transform(&g)).unwrap();
        prop_assert_eq!(before, after);
    }
}
