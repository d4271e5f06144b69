//! Verification suites behind `weylphi verify` and the acceptance tests.
//! Every check yields a [`Record`]; record order is fixed so JSON output is
//! byte-for-byte reproducible.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::elliptic::{d_c_classical, excellent_decomposition, validate_excellent, w_from_partition, ClassicalType, Variant};
use crate::error::{Error, Result};
use crate::field::{Field, Rational, F2, F3};
use crate::fq::{self, GroupKind};
use crate::isometry::{
    check_canonical_basis, jordan_type, lambda_bounds_check, lambda_pure_identity, predicted_even_restriction,
    predicted_jordan_type, rel_position, so_even_restriction, unipotent_label, w_p, FormKind, FormedSpace,
};
use crate::matrix::Matrix;
use crate::partition::{psi, Partition};
use crate::phi::{elliptic_labels, phi_full};
use crate::tables::{self, EXCELLENT_WORDS};
use crate::unipotent::{centralizer_dim_type_c_p2, check_x_equals_2y, phi_small_injection, UnipotentLabel};
use crate::weyl::classes::ClassLabel;
use crate::weyl::{Family, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational; never a failure.
    Report,
    /// The data could not decide; not a failure either.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Report => "report",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub suite: String,
    pub case: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Record {
    fn check(suite: Suite, case: impl Into<String>, ok: bool, data: Value) -> Self {
        let (witness, counterexample) = if ok { (Some(data), None) } else { (None, Some(data)) };
        Record { suite: suite.to_string(), case: case.into(), status: if ok { Status::Pass } else { Status::Fail }, witness, counterexample }
    }

    fn with_status(suite: Suite, case: impl Into<String>, status: Status, data: Value) -> Self {
        Record { suite: suite.to_string(), case: case.into(), status, witness: Some(data), counterexample: None }
    }
}

/// No record failed.
pub fn all_pass(records: &[Record]) -> bool {
    records.iter().all(|r| r.status != Status::Fail)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Excellent,
    Jordan,
    Identities,
    Tables,
    Fq,
    Isotropy,
    Csmall,
    Canonical,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Excellent,
        Suite::Jordan,
        Suite::Identities,
        Suite::Tables,
        Suite::Fq,
        Suite::Isotropy,
        Suite::Csmall,
        Suite::Canonical,
        Suite::Conjecture,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Excellent => "excellent",
            Suite::Jordan => "jordan",
            Suite::Identities => "identities",
            Suite::Tables => "tables",
            Suite::Fq => "fq",
            Suite::Isotropy => "isotropy",
            Suite::Csmall => "csmall",
            Suite::Canonical => "canonical",
            Suite::Conjecture => "conjecture",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by the suites; `None` picks each suite's default.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub max_n: Option<usize>,
    pub group: Option<GroupKind>,
    pub q: Option<u64>,
}

pub fn run(suite: Suite, opts: &Options) -> Result<Vec<Record>> {
    match suite {
        Suite::Excellent => excellent(opts.max_n.unwrap_or(9)),
        Suite::Jordan => jordan(opts.max_n.unwrap_or(6)),
        Suite::Identities => identities(opts.max_n.unwrap_or(12), opts.max_n.unwrap_or(14)),
        Suite::Tables => tables_suite(),
        Suite::Fq => {
            let mut out = Vec::new();
            for (kind, q) in instances(opts, &[(GroupKind::Sp4, 3), (GroupKind::Sp4, 2), (GroupKind::Sl3, 2), (GroupKind::Sl3, 3)]) {
                out.extend(fq_suite(kind, q)?);
            }
            Ok(out)
        }
        Suite::Isotropy => {
            let mut out = Vec::new();
            for (kind, q) in instances(opts, &[(GroupKind::Sp4, 3), (GroupKind::Sl3, 2), (GroupKind::Sp4, 2)]) {
                out.extend(isotropy(kind, q)?);
            }
            Ok(out)
        }
        Suite::Csmall => csmall(&[3, 5, 7]),
        Suite::Canonical => {
            let mut out = canonical_u_w(opts.max_n.unwrap_or(6))?;
            out.extend(canonical_fq()?);
            Ok(out)
        }
        Suite::Conjecture => conjecture(opts.max_n.unwrap_or(6)),
    }
}

fn instances(opts: &Options, defaults: &[(GroupKind, u64)]) -> Vec<(GroupKind, u64)> {
    match (opts.group, opts.q) {
        (None, None) => defaults.to_vec(),
        (g, q) => vec![(g.unwrap_or(GroupKind::Sp4), q.unwrap_or(3))],
    }
}

fn classical_group(f: Family, n: usize) -> Result<WeylGroup> {
    Ok(WeylGroup::new(crate::weyl::GroupDescriptor::new_lenient(f, n)?))
}

/// First failure as a counterexample, else the summary as witness.
fn aggregate<T: Serialize>(suite: Suite, case: String, failures: Vec<T>, summary: Value) -> Record {
    match failures.into_iter().next() {
        None => Record::check(suite, case, true, summary),
        Some(f) => Record::check(suite, case, false, json!({ "first": f, "summary": summary })),
    }
}

/// Excellent decompositions for n ≤ max_n: the word multiplies to w_{p*}⁻¹,
/// is reduced with one odd palindrome per block, and has d_C letters.
pub fn excellent(max_n: usize) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (ty, variant) in [(ClassicalType::C, Variant::A), (ClassicalType::B, Variant::B), (ClassicalType::D, Variant::B)] {
            if ty == ClassicalType::D && n < 2 {
                continue;
            }
            let g = classical_group(ty.family(), n)?;
            let parts: Vec<Partition> = Partition::all(n as u32)
                .into_iter()
                .filter(|p| variant == Variant::A || p.is_even_length())
                .collect();
            let results: Vec<(String, bool)> = parts
                .par_iter()
                .map(|p| {
                    let dec = excellent_decomposition(p, ty, variant)?;
                    let w = WeylElement::Perm(w_from_partition(p, 0).inverse());
                    let rep = validate_excellent(&dec, &w, &g)?;
                    let ok = rep.passed() && rep.letters == d_c_classical(p, ty)?;
                    Ok((format!("{p} {dec}"), ok))
                })
                .collect::<Result<_>>()?;
            let failures: Vec<&String> = results.iter().filter(|r| !r.1).map(|r| &r.0).collect();
            let variant_name = if variant == Variant::A { "per-part" } else { "paired" };
            out.push(aggregate(
                Suite::Excellent,
                format!("{}{n} {variant_name}", ty.family()),
                failures,
                json!({ "partitions": results.len() }),
            ));
        }
    }
    Ok(out)
}

fn u_w_jordan<F: Field>(space: &FormedSpace<F>, p: &Partition) -> Result<Partition> {
    let c = vec![F::one(); p.size() as usize];
    jordan_type(&space.u_w(p, &c)?)
}

/// Jordan types of u_w, the even orthogonal restriction, the relative
/// position of V* and u_w V*, and the closed formula for u_w⁻¹.
pub fn jordan(max_n: usize) -> Result<Vec<Record>> {
    let cases: Vec<Partition> = (1..=max_n as u32).flat_map(Partition::all).collect();
    let per: Vec<Vec<Record>> = cases
        .par_iter()
        .map(|p| -> Result<Vec<Record>> {
            let n = p.size() as usize;
            let mut out = Vec::new();
            let mut push = |case: String, got: &Partition, want: &Partition| {
                out.push(Record::check(Suite::Jordan, case, got == want, json!({ "jordan": got.to_string(), "expected": want.to_string() })));
            };
            let sp = FormedSpace::<Rational>::symplectic(n);
            push(format!("C{n} {p} char 0"), &u_w_jordan(&sp, p)?, &predicted_jordan_type(p, FormKind::Symplectic, 0, 0));
            let so = FormedSpace::<Rational>::orthogonal(n, 1);
            push(format!("B{n} {p} char 0"), &u_w_jordan(&so, p)?, &predicted_jordan_type(p, FormKind::Orthogonal, 1, 0));
            let so2 = FormedSpace::<F2>::orthogonal(n, 1);
            push(format!("B{n} {p} char 2"), &u_w_jordan(&so2, p)?, &predicted_jordan_type(p, FormKind::Orthogonal, 1, 2));
            let so3 = FormedSpace::<F3>::orthogonal(n, 1);
            push(format!("B{n} {p} char 3"), &u_w_jordan(&so3, p)?, &predicted_jordan_type(p, FormKind::Orthogonal, 1, 3));
            if p.is_even_length() {
                push(format!("D{n} {p} char 0"), &so_even_restriction::<Rational>(p)?.jordan, &predicted_even_restriction(p, 0));
                push(format!("D{n} {p} char 2"), &so_even_restriction::<F2>(p)?.jordan, &predicted_even_restriction(p, 2));
            }
            for (name, space) in [("C", &sp), ("B", &so)] {
                let kappa = space.kappa();
                let u = space.u_w(p, &vec![Rational::one(); n])?;
                let pos = rel_position(&space.standard_flag(), &space.standard_flag().transform(&u))?;
                let want = w_p(p, kappa).inverse();
                out.push(Record::check(
                    Suite::Jordan,
                    format!("{name}{n} {p} position"),
                    pos == want,
                    json!({ "position": pos.one_based(), "expected": want.one_based() }),
                ));
                let oracle = space.u_w_inverse_oracle(p)?;
                let minus = space.u_w(p, &vec![-Rational::one(); n])?;
                let ok = minus.inverse().is_some_and(|inv| inv == oracle);
                out.push(Record::check(Suite::Jordan, format!("{name}{n} {p} inverse formula"), ok, json!({ "constants": -1 })));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// ψ, the injection φ, X = 2Y, the centralizer dimension d' = d_C and
/// Λ'' = Λ'.
pub fn identities(max_n: usize, max_n_xy: usize) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for n in 1..=max_n_xy as u32 {
        let parts = Partition::all(n);
        let bad: Vec<String> = parts.iter().filter(|p| !check_x_equals_2y(p)).map(|p| p.to_string()).collect();
        out.push(aggregate(Suite::Identities, format!("X=2Y n={n}"), bad, json!({ "partitions": parts.len() })));
        if n as usize > max_n {
            continue;
        }
        let bad_psi: Vec<String> = parts
            .iter()
            .filter(|p| {
                let s = psi(p);
                let signs_ok = (1..=p.len()).all(|t| match s.get(t) {
                    1 => t % 2 == 1,
                    -1 => t % 2 == 0,
                    _ => true,
                });
                let core: Vec<u32> = phi_small_injection(p);
                let monotone = core.windows(2).all(|w| w[0] >= w[1]);
                !(s.get(1) == 1 && signs_ok && s.sum() == p.kappa() as i32 && monotone)
            })
            .map(|p| p.to_string())
            .collect();
        out.push(aggregate(Suite::Identities, format!("psi n={n}"), bad_psi, json!({ "partitions": parts.len() })));

        let images: Vec<Vec<u32>> = parts.iter().map(phi_small_injection).collect();
        let distinct: BTreeSet<&Vec<u32>> = images.iter().collect();
        let sums_ok: Vec<String> =
            images.iter().filter(|v| v.iter().sum::<u32>() != 2 * n + 1).map(|v| format!("{v:?}")).collect();
        let mut bad = sums_ok;
        if distinct.len() != images.len() {
            bad.push(format!("{} images for {} partitions", distinct.len(), images.len()));
        }
        out.push(aggregate(Suite::Identities, format!("phi injective n={n}"), bad, json!({ "images": distinct.len() })));

        let bad_d: Vec<String> = parts
            .iter()
            .filter_map(|p| {
                let lambda = Partition::from_unsorted(p.parts().iter().map(|x| 2 * x).collect());
                match (centralizer_dim_type_c_p2(&lambda), d_c_classical(p, ClassicalType::C)) {
                    (Ok(d1), Ok(d2)) => (d1 as usize != d2).then(|| format!("{p}: {d1} vs {d2}")),
                    (a, b) => Some(format!("{p}: {a:?} / {b:?}")),
                }
            })
            .collect();
        out.push(aggregate(Suite::Identities, format!("centralizer dim = d_C n={n}"), bad_d, json!({ "partitions": parts.len() })));

        let mut checked = 0;
        let mut bad_l = Vec::new();
        for p in &parts {
            for kappa in 0..=1 {
                if let Some(ok) = lambda_pure_identity(p, kappa, 2 * n as usize + kappa) {
                    checked += 1;
                    if !ok {
                        bad_l.push(format!("{p} kappa={kappa}"));
                    }
                }
            }
        }
        out.push(aggregate(Suite::Identities, format!("lambda'' = lambda' n={n}"), bad_l, json!({ "cases": checked })));
    }
    Ok(out)
}

/// Row counts, key uniqueness, elliptic counts by enumeration and the
/// listed excellent words.
pub fn tables_suite() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (f, want) in [(Family::G2, 3), (Family::F4, 9), (Family::E6, 5), (Family::E7, 12), (Family::E8, 30)] {
        let rows: Vec<_> = tables::rows_for(f).collect();
        out.push(Record::check(Suite::Tables, format!("{f} rows"), rows.len() == want, json!({ "rows": rows.len(), "expected": want })));
        let keys: BTreeSet<String> = rows.iter().map(|r| format!("{:?}{:?}", r.signature, r.discriminator)).collect();
        out.push(Record::check(Suite::Tables, format!("{f} keys unique"), keys.len() == rows.len(), json!({ "keys": keys.len() })));
    }
    for f in [Family::G2, Family::F4, Family::E6] {
        let g = WeylGroup::of(f, f.fixed_rank().expect("exceptional"))?;
        let t = g.class_table()?;
        let mut bad = Vec::new();
        let mut count = 0;
        for c in t.classes.iter().filter(|c| c.elliptic) {
            count += 1;
            let ClassLabel::Exceptional { signature, disc } = &c.label else {
                return Err(Error::Internal("exceptional label expected".into()));
            };
            match tables::lookup(f, signature, disc.as_ref()) {
                Ok(row) if row.d == c.d_c => {}
                Ok(row) => bad.push(format!("{}: d_C {} vs table {}", c.label, c.d_c, row.d)),
                Err(_) => bad.push(format!("{} missing from table", c.label)),
            }
        }
        let want = tables::rows_for(f).count();
        if count != want {
            bad.push(format!("{count} elliptic classes, table has {want}"));
        }
        out.push(aggregate(Suite::Tables, format!("{f} elliptic classes"), bad, json!({ "elliptic": count })));
    }
    for &(fam, word) in EXCELLENT_WORDS {
        let f: Family = fam.parse()?;
        let g = WeylGroup::of(f, f.fixed_rank().expect("exceptional"))?;
        let dec = crate::elliptic::ExcellentDecomposition::parse(word)?;
        let w = g.element_from_word(&dec.word())?;
        let rep = validate_excellent(&dec, &w, &g)?;
        let sig = g.reflection_char_poly(&w)?;
        let (row_ok, name) = match g.class_of(&w)? {
            ClassLabel::Exceptional { signature, disc } => {
                let row = tables::lookup(f, &signature, disc.as_ref())?;
                (row.d == dec.letters() && row.signature() == sig, row.name.clone())
            }
            _ => (false, String::new()),
        };
        out.push(Record::check(
            Suite::Tables,
            format!("{fam} word {word}"),
            rep.passed() && row_ok,
            json!({ "class": name, "letters": dec.letters(), "length": rep.length }),
        ));
    }
    Ok(out)
}

fn coxeter_label(kind: GroupKind) -> ClassLabel {
    match kind {
        GroupKind::Sl3 => ClassLabel::CycleType(Partition::from_unsorted(vec![3])),
        _ => ClassLabel::elliptic_classical(Partition::from_unsorted(vec![2])),
    }
}

fn is_regular(l: &UnipotentLabel) -> bool {
    l.parts().is_some_and(|p| p.len() == 1)
}

/// Brute force in one group: orders, minimal classes (odd q) or membership
/// of Φ(C) (q = 2), the Coxeter cell and the regular class.
pub fn fq_suite(kind: GroupKind, q: u64) -> Result<Vec<Record>> {
    crate::with_instance!(kind, q, inst => fq_records(&inst)?)
}

fn fq_records<F: Field>(inst: &fq::FqGroupInstance<F>) -> Result<Vec<Record>> {
    let (kind, q) = (inst.kind, inst.q);
    let tag = format!("{kind}(F_{q})");
    let mut out = Vec::new();
    let n_pos = kind.positive_roots();
    let shape_ok = inst.elements().len() as u128 == kind.order(q)
        && inst.flags().len() as u64 == kind.flag_count(q)
        && inst.unipotent_count() as u64 == q.pow(2 * n_pos);
    out.push(Record::check(
        Suite::Fq,
        format!("{tag} enumeration"),
        shape_ok,
        json!({
            "elements": inst.elements().len(),
            "flags": inst.flags().len(),
            "unipotent": inst.unipotent_count(),
            "classes": inst.unipotent_classes().iter().map(|c| json!([c.label.to_string(), c.members.len()])).collect::<Vec<_>>(),
        }),
    ));
    let labels = inst.weyl.class_labels()?;
    let dominance_ok = q % 2 == 1 || kind == GroupKind::Sl3;
    for c in &labels {
        if dominance_ok {
            let r = fq::minimal_class(c, inst).or_else(|e| match e {
                Error::Precondition(_) if kind == GroupKind::Sl3 => minimal_any_char(c, inst),
                e => Err(e),
            })?;
            out.push(Record::check(Suite::Fq, format!("{tag} minimal class {c}"), r.holds(), serde_json::to_value(&r)?));
        } else if inst.weyl.is_elliptic(c)? {
            let r = fq::bad_char_membership(c, inst)?;
            out.push(Record::check(Suite::Fq, format!("{tag} contains phi {c}"), r.holds, serde_json::to_value(&r)?));
        } else {
            let m = fq::meeting_classes(c, inst)?;
            out.push(Record::with_status(
                Suite::Fq,
                format!("{tag} meeting {c}"),
                Status::Report,
                json!({ "meeting": m.iter().map(|l| l.to_string()).collect::<Vec<_>>() }),
            ));
        }
    }
    let cox = coxeter_label(kind);
    let meeting = fq::meeting_classes(&cox, inst)?;
    out.push(Record::check(
        Suite::Fq,
        format!("{tag} coxeter cell meets only the regular class"),
        meeting.len() == 1 && is_regular(&meeting[0]),
        json!({ "class": cox.to_string(), "meeting": meeting.iter().map(|l| l.to_string()).collect::<Vec<_>>() }),
    ));
    let regular: Vec<_> = inst.unipotent_classes().iter().filter(|c| is_regular(&c.label)).collect();
    let missed: Vec<Vec<usize>> = inst
        .weyl
        .elements()?
        .iter()
        .filter(|w| !regular.iter().any(|r| fq::dsv_test_at(w, r, inst)))
        .map(|w| w.as_perm().map(|p| p.one_based()).unwrap_or_default())
        .collect();
    out.push(aggregate(Suite::Fq, format!("{tag} regular class meets every cell"), missed, json!({ "cells": inst.weyl.elements()?.len() })));
    Ok(out)
}

/// Closure order in SL_n is dominance in every characteristic.
fn minimal_any_char<F: Field>(c: &ClassLabel, inst: &fq::FqGroupInstance<F>) -> Result<fq::MinimalClassReport> {
    let meeting = fq::meeting_classes(c, inst)?;
    let parts = |l: &UnipotentLabel| l.parts().cloned().ok_or_else(|| Error::Internal("Jordan label expected".into()));
    let mut minimal = Vec::new();
    for a in &meeting {
        let mut is_min = true;
        for b in &meeting {
            if a != b && crate::partition::dominance_leq(&parts(b)?, &parts(a)?)? {
                is_min = false;
            }
        }
        if is_min {
            minimal.push(a.clone());
        }
    }
    let expected = phi_full(&inst.weyl, c, F::characteristic())?;
    let mins = inst.weyl.min_length(c)?;
    let independent_of_w = mins.elements.iter().all(|w| {
        inst.unipotent_classes().iter().filter(|g| fq::dsv_test_at(w, g, inst)).map(|g| g.label.clone()).collect::<Vec<_>>() == meeting
    });
    Ok(fq::MinimalClassReport {
        group: format!("{}(F_{})", inst.kind, inst.q),
        class: c.to_string(),
        w: mins.elements[0].as_perm().map(|p| p.one_based()).unwrap_or_default(),
        meeting: meeting.iter().map(|l| l.to_string()).collect(),
        unique: minimal.len() == 1,
        matches_phi: minimal.len() == 1 && minimal[0].matches(&expected),
        minimal: minimal.iter().map(|l| l.to_string()).collect(),
        expected: expected.to_string(),
        independent_of_w,
    })
}

/// Stabilizers of (g, B) in B_w for elliptic C.
pub fn isotropy(kind: GroupKind, q: u64) -> Result<Vec<Record>> {
    crate::with_instance!(kind, q, inst => {
        let mut out = Vec::new();
        for c in elliptic_labels(&inst.weyl)? {
            let r = fq::isotropy_check(&c, &inst)?;
            out.push(Record::check(Suite::Isotropy, format!("{kind}(F_{q}) {c}"), r.holds(), serde_json::to_value(&r)?));
        }
        out
    })
}

/// Centralizer growth of classes meeting elliptic cells of Sp_4.
pub fn csmall(qs: &[u64]) -> Result<Vec<Record>> {
    let weyl = GroupKind::Sp4.weyl();
    let mut out = Vec::new();
    for c in elliptic_labels(&weyl)? {
        let r = fq::c_small_check(&c, qs)?;
        let status = if r.inconclusive {
            Status::Inconclusive
        } else if r.holds() {
            Status::Pass
        } else {
            Status::Fail
        };
        let v = serde_json::to_value(&r)?;
        out.push(match status {
            Status::Fail => Record::check(Suite::Csmall, format!("sp4 {c}"), false, v),
            s => Record::with_status(Suite::Csmall, format!("sp4 {c}"), s, v),
        });
    }
    Ok(out)
}

fn canonical_record<F: Field>(case: String, space: &FormedSpace<F>, g: &Matrix<F>, p: &Partition) -> Result<Record> {
    let cb = check_canonical_basis(space, g, &space.standard_flag(), p)?;
    let lam = lambda_bounds_check(space, g, p)?;
    let ok = cb.holds() && lam.holds;
    Ok(Record::check(
        Suite::Canonical,
        case,
        ok,
        json!({
            "extended": cb.extended,
            "failed_clauses": cb.clauses.iter().filter(|c| !c.1).map(|c| c.0.clone()).collect::<Vec<_>>(),
            "string_decomposition": cb.string_decomposition,
            "tight": lam.tight,
            "lambda_holds": lam.holds,
        }),
    ))
}

/// Adapted bases and Λ bounds on the u_w instances: symplectic over Q and
/// odd orthogonal over Q, F_2 and F_3, with g = u_w⁻¹ (position w_{p*}).
pub fn canonical_u_w(max_n: usize) -> Result<Vec<Record>> {
    let cases: Vec<Partition> = (1..=max_n as u32).flat_map(Partition::all).collect();
    fn one<F: Field>(space: &FormedSpace<F>, p: &Partition, name: &str) -> Result<Record> {
        let n = p.size() as usize;
        let u = space.u_w(p, &vec![F::one(); n])?;
        let g = u.inverse().ok_or_else(|| Error::Internal("u_w is singular".into()))?;
        canonical_record(format!("{name}{n} {p} char {}", F::characteristic()), space, &g, p)
    }
    let per: Vec<Vec<Record>> = cases
        .par_iter()
        .map(|p| {
            let n = p.size() as usize;
            Ok(vec![
                one(&FormedSpace::<Rational>::symplectic(n), p, "C")?,
                one(&FormedSpace::<Rational>::orthogonal(n, 1), p, "B")?,
                one(&FormedSpace::<F2>::orthogonal(n, 1), p, "B")?,
                one(&FormedSpace::<F3>::orthogonal(n, 1), p, "B")?,
            ])
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Adapted bases for every unipotent g of Sp_4(F_3) with
/// rel_position(F_0, g F_0) = w_{p*}, p ∈ {(2), (1,1)}.
pub fn canonical_fq() -> Result<Vec<Record>> {
    let inst = fq::enumerate::<F3>(GroupKind::Sp4)?;
    let space = FormedSpace::<F3>::symplectic(2);
    let mut out = Vec::new();
    for p in [Partition::from_unsorted(vec![2]), Partition::from_unsorted(vec![1, 1])] {
        let w = WeylElement::Perm(w_p(&p, 0));
        let cell: BTreeSet<usize> = inst.cell(&w).into_iter().collect();
        let members: Vec<usize> =
            inst.unipotent_classes().iter().flat_map(|c| c.members.iter().copied()).filter(|i| cell.contains(i)).collect();
        let results: Vec<Record> = members
            .par_iter()
            .map(|&i| canonical_record(format!("sp4(F_3) {p} element {i}"), &space, &inst.elements()[i], &p))
            .collect::<Result<_>>()?;
        let failures: Vec<&Record> = results.iter().filter(|r| r.status == Status::Fail).collect();
        let extended = results.iter().filter(|r| r.witness.as_ref().is_some_and(|w| w["extended"] == json!(true))).count();
        out.push(aggregate(
            Suite::Canonical,
            format!("sp4(F_3) unipotent pairs in position {p}"),
            failures.iter().map(|r| r.case.clone()).collect(),
            json!({ "pairs": results.len(), "extended": extended }),
        ));
    }
    Ok(out)
}

/// Whether the class of u_w (or of its even orthogonal restriction) is Φ of
/// the class of w.  Reported, never failed.
pub fn conjecture(max_n: usize) -> Result<Vec<Record>> {
    let cases: Vec<Partition> = (1..=max_n as u32).flat_map(Partition::all).collect();
    let per: Vec<Vec<Record>> = cases
        .par_iter()
        .map(|p| -> Result<Vec<Record>> {
            let n = p.size() as usize;
            let label = ClassLabel::elliptic_classical(p.clone());
            let mut out = Vec::new();
            let mut push = |case: String, got: UnipotentLabel, phi: UnipotentLabel| {
                let same = got.matches(&phi);
                out.push(Record::with_status(
                    Suite::Conjecture,
                    case,
                    if same { Status::Pass } else { Status::Report },
                    json!({ "u_w": got.to_string(), "phi": phi.to_string(), "equal": same }),
                ));
            };
            let wc = classical_group(Family::C, n)?;
            let wb = classical_group(Family::B, n)?;
            let sp = FormedSpace::<Rational>::symplectic(n);
            let c0 = vec![Rational::one(); n];
            push(format!("C{n} {p} char 0"), UnipotentLabel::jordan(jordan_type(&sp.u_w(p, &c0)?)?), phi_full(&wc, &label, 0)?);
            let so = FormedSpace::<Rational>::orthogonal(n, 1);
            push(format!("B{n} {p} char 0"), UnipotentLabel::jordan(jordan_type(&so.u_w(p, &c0)?)?), phi_full(&wb, &label, 0)?);
            let so2 = FormedSpace::<F2>::orthogonal(n, 1);
            let u2 = so2.u_w(p, &vec![F2::one(); n])?;
            push(format!("B{n} {p} char 2"), unipotent_label(&so2, &u2)?, phi_full(&wb, &label, 2)?);
            let sp2 = FormedSpace::<F2>::symplectic(n);
            let v2 = sp2.u_w(p, &vec![F2::one(); n])?;
            push(format!("C{n} {p} char 2"), unipotent_label(&sp2, &v2)?, phi_full(&wc, &label, 2)?);
            if p.is_even_length() && n >= 2 {
                let wd = classical_group(Family::D, n)?;
                let strip = |l: UnipotentLabel| l.parts().cloned().map(UnipotentLabel::jordan).unwrap_or(l);
                push(format!("D{n} {p} char 0"), UnipotentLabel::jordan(so_even_restriction::<Rational>(p)?.jordan), phi_full(&wd, &label, 0)?);
                push(
                    format!("D{n} {p} char 2 (Jordan type only)"),
                    UnipotentLabel::jordan(so_even_restriction::<F2>(p)?.jordan),
                    strip(phi_full(&wd, &label, 2)?),
                );
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}
