use weylphi::field::{Field, F2, F3, F5, F7};
use weylphi::fq::*;
use weylphi::isometry::FormedSpace;
use weylphi::partition::Partition;
use weylphi::unipotent::UnipotentLabel;
use weylphi::weyl::classes::ClassLabel;
use weylphi::weyl::Family;

fn label(s: &str, f: Family) -> ClassLabel {
    ClassLabel::parse(s, f).unwrap()
}

fn jordan(s: &str) -> UnipotentLabel {
    UnipotentLabel::jordan(s.parse().unwrap())
}

#[test]
fn sp4_f3_shape() {
    let inst = enumerate::<F3>(GroupKind::Sp4).unwrap();
    assert_eq!(inst.elements().len() as u128, GroupKind::Sp4.order(3));
    assert_eq!(inst.flags().len() as u64, GroupKind::Sp4.flag_count(3));
    // Steinberg: q^{2N} unipotent elements
    assert_eq!(inst.unipotent_count(), 3usize.pow(8));
    assert_eq!(inst.center_order(), 2);
    let sizes: Vec<(String, usize)> = inst.unipotent_classes().iter().map(|g| (g.label.to_string(), g.members.len())).collect();
    let expect = [("(1,1,1,1)", 1), ("(2,1,1)", 80), ("(2,2)", 720), ("(4)", 5760)];
    assert_eq!(sizes, expect.iter().map(|(a, b)| (a.to_string(), *b)).collect::<Vec<_>>());
}

#[test]
fn cell_counts_agree_with_enumeration() {
    let inst = enumerate::<F3>(GroupKind::Sp4).unwrap();
    for c in inst.weyl.class_labels().unwrap() {
        for w in inst.weyl.min_length(&c).unwrap().elements {
            let fast = cell_unipotent_counts::<F3>(GroupKind::Sp4, &w).unwrap();
            for g in inst.unipotent_classes() {
                let direct = g.members.iter().filter(|&&i| inst.position_at(i) == &w).count() as u64;
                assert_eq!(fast.get(&g.label).copied().unwrap_or(0), direct, "{c} {}", g.label);
            }
        }
    }
}

#[test]
fn so5_minimal_classes_match_phi() {
    let inst = enumerate::<F3>(GroupKind::So5).unwrap();
    assert_eq!(inst.unipotent_count(), 3usize.pow(8));
    for c in inst.weyl.class_labels().unwrap() {
        let r = minimal_class(&c, &inst).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}

#[test]
fn so5_needs_odd_characteristic() {
    assert!(Model::<F2>::new(GroupKind::So5).is_err());
}

#[test]
fn sp4_f2_meeting_sets() {
    let inst = enumerate::<F2>(GroupKind::Sp4).unwrap();
    let meet = |s: &str| -> Vec<String> { meeting_classes(&label(s, Family::C), &inst).unwrap().iter().map(|l| l.to_string()).collect() };
    assert_eq!(meet("[];[2]"), ["(4)[4+]"]);
    assert_eq!(meet("[];[1,1]"), ["(2,2)[2+]", "(4)[4+]"]);
    for s in ["[];[1,1]", "[];[2]"] {
        let c = label(s, Family::C);
        let phi = weylphi::phi::phi_full(&inst.weyl, &c, 2).unwrap();
        let gamma = inst.unipotent_classes().iter().find(|g| g.label.matches(&phi)).unwrap();
        assert!(dsv_test(&c, gamma, &inst).unwrap(), "{s}");
    }
}

#[test]
fn minimal_class_refuses_char_two() {
    let inst = enumerate::<F2>(GroupKind::Sp4).unwrap();
    assert!(minimal_class(&label("[];[2]", Family::C), &inst).is_err());
}

#[test]
fn isotropy_orders() {
    let inst = enumerate::<F3>(GroupKind::Sp4).unwrap();
    let r = isotropy_check(&label("[];[1,1]", Family::C), &inst).unwrap();
    assert_eq!((r.det_one_minus_w, r.bound), (4, 8));
    assert_eq!(r.orders, [2, 4]);
    let r = isotropy_check(&label("[];[2]", Family::C), &inst).unwrap();
    assert_eq!((r.det_one_minus_w, r.bound, r.orders.clone()), (2, 4, vec![2]));
    assert!(isotropy_check(&label("[1];[1]", Family::C), &inst).is_err());
}

/// |Z(u)| of the regular class is |Z|·q^2; the two rational forms of (2,2)
/// have q^3·|O_2^±(F_q)| = 2 q^3 (q ∓ 1).
fn centralizer_orders<F: Field>() -> (u64, Vec<u64>) {
    let q = F::order().unwrap();
    let space = FormedSpace::<F>::symplectic(2);
    let reg = sp_representative::<F>(2, &"4".parse().unwrap()).unwrap();
    let two: Partition = "2,2".parse().unwrap();
    let mut forms = Vec::new();
    for a in 1..q {
        for b in 1..q {
            let g = sp_representative_with::<F>(2, &two, &[F::nth(a), F::nth(b)]).unwrap();
            forms.push(centralizer_order(&space, &g, false).unwrap());
        }
    }
    forms.sort_unstable();
    forms.dedup();
    (centralizer_order(&space, &reg, false).unwrap(), forms)
}

#[test]
fn sp4_centralizer_orders() {
    for (q, got) in [(3u64, centralizer_orders::<F3>()), (5, centralizer_orders::<F5>()), (7, centralizer_orders::<F7>())] {
        assert_eq!(got, (2 * q * q, vec![2 * q.pow(3) * (q - 1), 2 * q.pow(3) * (q + 1)]), "q = {q}");
    }
    let space = FormedSpace::<F5>::symplectic(2);
    let p: Partition = "2,1,1".parse().unwrap();
    let g = sp_representative::<F5>(2, &p).unwrap();
    // dim Z = 6 for (2,1,1) in Sp_4
    assert_eq!(lie_centralizer_dim(&space, &g), 6);
}

#[test]
fn c_small_degrees() {
    let r = c_small_check(&label("[];[1,1]", Family::C), &[3, 5, 7]).unwrap();
    assert!(r.holds());
    let degrees: Vec<(String, Option<usize>, bool)> = r.rows.iter().map(|x| (x.unipotent.clone(), x.degree, x.is_phi)).collect();
    assert_eq!(degrees, [("(2,2)".to_string(), Some(4), true), ("(4)".to_string(), Some(2), false)]);
}

#[test]
fn coxeter_point_counts() {
    let c = label("[];[2]", Family::C);
    let r = point_count_series(GroupKind::Sp4, &c, &jordan("4"), &[2, 3]).unwrap();
    assert_eq!(r.consistent, Some(true));
    assert!(r.ratios.iter().all(|(_, x)| x == "1"));
    let r = point_count_series(GroupKind::Sp4, &c, &jordan("2,2"), &[2, 3]).unwrap();
    assert!(r.ratios.iter().all(|(_, x)| x == "0"));
}

#[test]
fn sl3_instances_via_macro() {
    for q in [2u64, 3] {
        let meet = (|| -> weylphi::Result<Vec<String>> {
            weylphi::with_instance!(GroupKind::Sl3, q, inst => {
                meeting_classes(&label("[3]", Family::A), &inst)?.iter().map(|l| l.to_string()).collect()
            })
        })()
        .unwrap();
        assert_eq!(meet, ["(3)"], "q = {q}");
    }
}
