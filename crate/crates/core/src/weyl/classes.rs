//! Conjugacy class labels and class tables of enumerable Weyl groups.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{Family, GroupDescriptor, Perm, WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::CyclotomicSignature;
use crate::tables;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Discriminator {
    Prime,
    DoublePrime,
    /// Position among classes sharing a polynomial, ordered by (d_C, size, smallest reduced word).
    Index(u8),
}

impl fmt::Display for Discriminator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discriminator::Prime => write!(f, "'"),
            Discriminator::DoublePrime => write!(f, "''"),
            Discriminator::Index(k) => write!(f, "#{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassLabel {
    /// Type A: cycle type of the permutation.
    CycleType(Partition),
    /// Types B/C/D: positive and negative cycle lengths.  `split` separates
    /// the two W(D_n)-classes inside one very even W(B_n)-class.
    Classical { positive: Partition, negative: Partition, split: Option<u8> },
    Exceptional { signature: CyclotomicSignature, disc: Option<Discriminator> },
}

fn bracket(p: &Partition) -> String {
    format!("[{}]", p.parts().iter().join(","))
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::CycleType(p) => write!(f, "{}", bracket(p)),
            ClassLabel::Classical { positive, negative, split } => {
                write!(f, "{};{}", bracket(positive), bracket(negative))?;
                if let Some(k) = split {
                    write!(f, "#{k}")?;
                }
                Ok(())
            }
            ClassLabel::Exceptional { signature, disc } => {
                write!(f, "{}", signature.dotted())?;
                if let Some(d) = disc {
                    write!(f, "{d}")?;
                }
                Ok(())
            }
        }
    }
}

fn split_index(s: &str) -> Result<(&str, Option<u8>)> {
    match s.rsplit_once('#') {
        Some((head, k)) => {
            let k = k.trim().parse().map_err(|_| Error::Parse(format!("bad class index in {s:?}")))?;
            Ok((head, Some(k)))
        }
        None => Ok((s, None)),
    }
}

impl ClassLabel {
    pub fn elliptic_classical(p: Partition) -> Self {
        ClassLabel::Classical { positive: Partition::empty(), negative: p, split: None }
    }

    /// Parses `[α];[β]` or `(α;β)` (B/C/D), `[τ]` (A) or a dotted polynomial such as
    /// `2.2.6'` (exceptional), optionally prefixed by the family as in `F4:2.2.6'`.
    pub fn parse(s: &str, family: Family) -> Result<Self> {
        let mut body = s.trim();
        if let Some((fam, rest)) = body.split_once(':') {
            let f: Family = fam.parse()?;
            if f != family {
                return Err(Error::Parse(format!("label {s:?} is for {f}, not {family}")));
            }
            body = rest.trim();
        }
        match family {
            Family::A => Ok(ClassLabel::CycleType(body.parse()?)),
            Family::B | Family::C | Family::D => {
                let (head, split) = split_index(body)?;
                // "(α;β)" with the pair wrapped in one set of parentheses
                let head = match head.strip_prefix('(').and_then(|h| h.strip_suffix(')')) {
                    Some(inner) if !inner.contains(['(', ')']) => inner,
                    _ => head,
                };
                let (a, b) = head
                    .split_once(';')
                    .ok_or_else(|| Error::Parse(format!("classical label {s:?} needs the form [α];[β]")))?;
                Ok(ClassLabel::Classical { positive: a.parse()?, negative: b.parse()?, split })
            }
            _ => {
                let (head, disc) = if let Some(h) = body.strip_suffix("''") {
                    (h, Some(Discriminator::DoublePrime))
                } else if let Some(h) = body.strip_suffix('\'') {
                    (h, Some(Discriminator::Prime))
                } else {
                    let (h, k) = split_index(body)?;
                    (h, k.map(Discriminator::Index))
                };
                Ok(ClassLabel::Exceptional { signature: head.parse()?, disc })
            }
        }
    }
}

/// Permutation with the given signed cycle type, cycles on consecutive
/// blocks: positive cycles first, then negative ones.  Each cycle sends i to
/// i+1 and its last point to the first point (positive) or to the mirror
/// of the first point (negative).
pub fn signed_cycle_representative(positive: &Partition, negative: &Partition) -> Perm {
    let n = (positive.size() + negative.size()) as usize;
    let m = 2 * n;
    let mut v = vec![0u8; m];
    let mut s = 0;
    for (&len, neg) in positive.parts().iter().map(|p| (p, false)).chain(negative.parts().iter().map(|p| (p, true))) {
        let len = len as usize;
        for i in s..s + len {
            let img = if i + 1 < s + len {
                i + 1
            } else if neg {
                m - 1 - s
            } else {
                s
            };
            v[i] = img as u8;
            v[m - 1 - i] = (m - 1 - img) as u8;
        }
        s += len;
    }
    Perm(v)
}

/// Permutation of degree `m` with the given cycle type on consecutive blocks.
pub fn cycle_type_representative(tau: &Partition) -> Perm {
    let mut v = Vec::with_capacity(tau.size() as usize);
    let mut s = 0u8;
    for &len in tau.parts() {
        let len = len as u8;
        v.extend((s + 1..s + len).chain(std::iter::once(s)));
        s += len;
    }
    Perm(v)
}

fn is_very_even(positive: &Partition, negative: &Partition) -> bool {
    negative.is_empty() && !positive.is_empty() && positive.parts().iter().all(|p| p % 2 == 0)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub label: ClassLabel,
    pub size: usize,
    pub d_c: usize,
    /// Every member has full support.
    pub elliptic: bool,
    pub min_elements: Vec<WeylElement>,
}

impl ClassInfo {
    pub fn representative(&self) -> &WeylElement {
        &self.min_elements[0]
    }
}

/// All elements of an enumerable Weyl group with lengths, supports and classes.
#[derive(Debug)]
pub struct ClassTable {
    pub descriptor: GroupDescriptor,
    pub classes: Vec<ClassInfo>,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, u32>,
    lengths: Vec<u16>,
    supports: Vec<u64>,
    class_of: Vec<u32>,
}

impl ClassTable {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn index_of(&self, g: &WeylElement) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn length_at(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    pub fn support_at(&self, i: usize) -> u64 {
        self.supports[i]
    }

    pub fn class_at(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn find(&self, label: &ClassLabel) -> Result<&ClassInfo> {
        self.classes
            .iter()
            .find(|c| &c.label == label)
            .ok_or_else(|| Error::NotFound(format!("class {label} in W({})", self.descriptor)))
    }

    /// Indices of all elements of the class.
    pub fn members(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.elements.len()).filter(move |&i| self.class_of[i] as usize == class)
    }

    fn build(w: &WeylGroup) -> Result<Self> {
        if w.descriptor().realization() == super::Realization::TableOnly {
            return Err(Error::Unsupported(format!("W({}) is table-only", w.descriptor())));
        }
        let order = w.descriptor().order();
        let budget = crate::enumeration_budget();
        if order > budget as u128 {
            return Err(Error::Budget { needed: order.min(u64::MAX as u128) as u64, budget });
        }
        // breadth-first search by right multiplication: BFS paths are reduced words
        let gens = w.generators();
        let mut elements = vec![w.identity()];
        let mut index = HashMap::from([(w.identity(), 0u32)]);
        let mut lengths = vec![0u16];
        let mut supports = vec![0u64];
        let mut k = 0;
        while k < elements.len() {
            for (i, s) in gens.iter().enumerate() {
                let y = w.mul(&elements[k], s);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len() as u32);
                    lengths.push(lengths[k] + 1);
                    supports.push(supports[k] | 1 << i);
                    elements.push(y);
                }
            }
            k += 1;
        }
        if elements.len() as u128 != order {
            return Err(Error::Internal(format!("enumerated {} elements of W({}), expected {order}", elements.len(), w.descriptor())));
        }

        let mut class_of = vec![u32::MAX; elements.len()];
        let mut labels: Vec<ClassLabel> = Vec::new();
        let family = w.family();
        if family.is_classical() {
            let mut ids: HashMap<ClassLabel, u32> = HashMap::new();
            let mut very_even: HashMap<ClassLabel, HashSet<u32>> = HashMap::new();
            for (i, g) in elements.iter().enumerate() {
                let p = g.as_perm().expect("classical");
                let label = match family {
                    Family::A => ClassLabel::CycleType(p.cycle_type()),
                    _ => {
                        let (positive, negative) = p.signed_cycle_type();
                        let ve = family == Family::D && is_very_even(&positive, &negative);
                        let l = ClassLabel::Classical { positive, negative, split: None };
                        if ve {
                            very_even.entry(l.clone()).or_default();
                        }
                        l
                    }
                };
                let next = ids.len() as u32;
                let id = *ids.entry(label.clone()).or_insert_with(|| {
                    labels.push(label);
                    next
                });
                class_of[i] = id;
            }
            // a very even W(B_n)-class is two W(D_n)-classes; #1 holds the block representative
            for (label, _) in very_even {
                let ClassLabel::Classical { positive, negative, .. } = &label else { unreachable!() };
                let id = ids[&label];
                let rep = WeylElement::Perm(signed_cycle_representative(positive, negative));
                let orbit = orbit_indices(w, &gens, &index, &elements, index[&rep] as usize);
                let second = labels.len() as u32;
                labels[id as usize] = ClassLabel::Classical { positive: positive.clone(), negative: negative.clone(), split: Some(1) };
                labels.push(ClassLabel::Classical { positive: positive.clone(), negative: negative.clone(), split: Some(2) });
                for (i, c) in class_of.iter_mut().enumerate() {
                    if *c == id && !orbit.contains(&i) {
                        *c = second;
                    }
                }
            }
        } else {
            let mut orbits: Vec<Vec<usize>> = Vec::new();
            for i in 0..elements.len() {
                if class_of[i] != u32::MAX {
                    continue;
                }
                let orbit = orbit_indices(w, &gens, &index, &elements, i);
                for &j in &orbit {
                    class_of[j] = orbits.len() as u32;
                }
                orbits.push(orbit.into_iter().sorted().collect());
            }
            labels = exceptional_labels(w, &orbits, &elements, &lengths)?;
        }

        let mut members: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
        for (i, &c) in class_of.iter().enumerate() {
            members[c as usize].push(i);
        }
        let full = (1u64 << w.rank()) - 1;
        let mut classes: Vec<ClassInfo> = labels
            .into_iter()
            .zip(members)
            .map(|(label, m)| {
                let d_c = m.iter().map(|&i| lengths[i]).min().expect("nonempty class") as usize;
                let mut min_elements: Vec<WeylElement> =
                    m.iter().filter(|&&i| lengths[i] as usize == d_c).map(|&i| elements[i].clone()).collect();
                min_elements.sort();
                ClassInfo { label, size: m.len(), d_c, elliptic: m.iter().all(|&i| supports[i] == full), min_elements }
            })
            .collect();
        // renumber classes in label order
        let mut perm: Vec<usize> = (0..classes.len()).collect();
        perm.sort_by(|&a, &b| classes[a].label.cmp(&classes[b].label));
        let mut new_id = vec![0u32; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_id[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = new_id[*c as usize];
        }
        let mut slots: Vec<Option<ClassInfo>> = classes.drain(..).map(Some).collect();
        let classes = perm.iter().map(|&old| slots[old].take().expect("each class once")).collect();
        Ok(ClassTable { descriptor: w.descriptor(), classes, elements, index, lengths, supports, class_of })
    }
}

fn orbit_indices(
    w: &WeylGroup,
    gens: &[WeylElement],
    index: &HashMap<WeylElement, u32>,
    elements: &[WeylElement],
    start: usize,
) -> HashSet<usize> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = w.mul(&w.mul(s, &elements[x]), s);
            let j = index[&y] as usize;
            if seen.insert(j) {
                queue.push_back(j);
            }
        }
    }
    seen
}

/// Labels for the orbits of an exceptional group: the polynomial, plus ′/″ for
/// the F4 pair with polynomial Φ2²Φ6 and an index for any other collision.
fn exceptional_labels(
    w: &WeylGroup,
    orbits: &[Vec<usize>],
    elements: &[WeylElement],
    lengths: &[u16],
) -> Result<Vec<ClassLabel>> {
    let sigs: Vec<CyclotomicSignature> =
        orbits.iter().map(|o| w.reflection_char_poly(&elements[o[0]])).collect::<Result<_>>()?;
    let mut groups: BTreeMap<&CyclotomicSignature, Vec<usize>> = BTreeMap::new();
    for (k, s) in sigs.iter().enumerate() {
        groups.entry(s).or_default().push(k);
    }
    let f4_pair: CyclotomicSignature = "2.2.6".parse()?;
    let prime_class = if w.family() == Family::F4 {
        let coxeter = long_d4_coxeter(w);
        Some(orbits.iter().position(|o| o.iter().any(|&i| elements[i] == coxeter)).expect("element of the group"))
    } else {
        None
    };
    let mut labels = vec![None; orbits.len()];
    for (sig, ks) in groups {
        if ks.len() == 1 {
            labels[ks[0]] = Some(ClassLabel::Exceptional { signature: sig.clone(), disc: None });
        } else if w.family() == Family::F4 && *sig == f4_pair && ks.len() == 2 {
            for &k in &ks {
                let disc = if Some(k) == prime_class { Discriminator::Prime } else { Discriminator::DoublePrime };
                labels[k] = Some(ClassLabel::Exceptional { signature: sig.clone(), disc: Some(disc) });
            }
        } else {
            let key = |k: usize| {
                let o = &orbits[k];
                let d = o.iter().map(|&i| lengths[i]).min().expect("nonempty");
                let word = o.iter().filter(|&&i| lengths[i] == d).map(|&i| w.word_unchecked(&elements[i])).min();
                (d, o.len(), word)
            };
            let ordered: Vec<usize> = ks.iter().copied().sorted_by_cached_key(|&k| key(k)).collect();
            for (pos, k) in ordered.into_iter().enumerate() {
                labels[k] =
                    Some(ClassLabel::Exceptional { signature: sig.clone(), disc: Some(Discriminator::Index(pos as u8 + 1)) });
            }
        }
    }
    Ok(labels.into_iter().map(|l| l.expect("every orbit labelled")).collect())
}

/// Coxeter element of the subsystem of long roots of F4 (of type D4).
pub fn long_d4_coxeter(w: &WeylGroup) -> WeylElement {
    let rs = w.root_system();
    let long: Vec<Vec<i8>> = rs.positive_roots().iter().filter(|r| rs.is_long(r)).cloned().collect();
    let simple = rs.subsystem_simple_roots(&long);
    debug_assert_eq!(simple.len(), 4);
    let x = simple.iter().fold(super::RootElement::identity(rs.rank()), |acc, b| acc.compose(&rs.reflection(b)));
    WeylElement::Root(x)
}

fn cache() -> &'static Mutex<HashMap<GroupDescriptor, Arc<ClassTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<GroupDescriptor, Arc<ClassTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Result of a minimal-length query.
#[derive(Clone, Debug, Serialize)]
pub struct MinLength {
    pub d_c: usize,
    pub elements: Vec<WeylElement>,
    /// False when `elements` is only a sample of C_min (or empty).
    pub complete: bool,
}

impl WeylGroup {
    /// Class table, built once per group and cached.
    pub fn class_table(&self) -> Result<Arc<ClassTable>> {
        if let Some(t) = cache().lock().expect("cache lock").get(&self.descriptor()) {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new(ClassTable::build(self)?);
        cache().lock().expect("cache lock").entry(self.descriptor()).or_insert_with(|| Arc::clone(&t));
        Ok(t)
    }

    pub fn class_of(&self, g: &WeylElement) -> Result<ClassLabel> {
        self.check(g)?;
        let family = self.family();
        match g {
            WeylElement::Perm(p) if family == Family::A => Ok(ClassLabel::CycleType(p.cycle_type())),
            WeylElement::Perm(p) => {
                let (positive, negative) = p.signed_cycle_type();
                if family == Family::D && is_very_even(&positive, &negative) {
                    let t = self.class_table()?;
                    return Ok(t.classes[t.class_at(t.index_of(g).expect("enumerated"))].label.clone());
                }
                Ok(ClassLabel::Classical { positive, negative, split: None })
            }
            WeylElement::Root(_) if self.is_enumerable() => {
                let t = self.class_table()?;
                Ok(t.classes[t.class_at(t.index_of(g).expect("enumerated"))].label.clone())
            }
            WeylElement::Root(_) => {
                let signature = self.reflection_char_poly(g)?;
                if signature.has_eigenvalue_one() {
                    return Err(Error::Unsupported(format!(
                        "classes of non-elliptic elements of W({}) are not tabulated",
                        self.descriptor()
                    )));
                }
                let row = tables::lookup(family, &signature, None)?;
                Ok(ClassLabel::Exceptional { signature, disc: row.discriminator.clone() })
            }
        }
    }

    /// Checks that the label names a class of this group.
    pub fn validate_label(&self, label: &ClassLabel) -> Result<()> {
        let n = self.rank() as u32;
        let bad = |why: String| Err(Error::Mismatch(format!("{label} is not a class of W({}): {why}", self.descriptor())));
        match (label, self.family()) {
            (ClassLabel::CycleType(p), Family::A) if p.size() == n + 1 => Ok(()),
            (ClassLabel::CycleType(p), Family::A) => bad(format!("size {} ≠ {}", p.size(), n + 1)),
            (ClassLabel::Classical { positive, negative, split }, f) if f.is_isometry_type() => {
                if positive.size() + negative.size() != n {
                    return bad("sizes do not add up to the rank".into());
                }
                if f == Family::D && !negative.is_even_length() {
                    return bad("odd number of negative cycles".into());
                }
                let ve = f == Family::D && is_very_even(positive, negative);
                match (ve, split) {
                    (true, None) => Err(Error::Ambiguous(format!("{label} is very even; add #1 or #2"))),
                    (true, Some(1 | 2)) | (false, None) => Ok(()),
                    _ => bad("unexpected split marker".into()),
                }
            }
            (ClassLabel::Exceptional { .. }, f) if !f.is_classical() => {
                if self.is_enumerable() {
                    self.class_table()?.find(label).map(|_| ())
                } else {
                    let ClassLabel::Exceptional { signature, disc } = label else { unreachable!() };
                    tables::lookup(f, signature, disc.as_ref()).map(|_| ())
                }
            }
            _ => bad("wrong kind of label".into()),
        }
    }

    pub fn is_elliptic(&self, label: &ClassLabel) -> Result<bool> {
        self.validate_label(label)?;
        Ok(match label {
            ClassLabel::CycleType(p) => p.len() == 1,
            ClassLabel::Classical { positive, .. } => positive.is_empty(),
            ClassLabel::Exceptional { signature, disc } => tables::lookup(self.family(), signature, disc.as_ref()).is_ok(),
        })
    }

    /// All class labels: every class for enumerable and classical groups,
    /// the elliptic classes for E7 and E8.
    pub fn class_labels(&self) -> Result<Vec<ClassLabel>> {
        let n = self.rank() as u32;
        match self.family() {
            Family::A => Ok(Partition::all(n + 1).into_iter().map(ClassLabel::CycleType).collect()),
            f if f.is_isometry_type() => {
                let mut out = Vec::new();
                for k in 0..=n {
                    for positive in Partition::all(n - k) {
                        for negative in Partition::all(k) {
                            if f == Family::D && !negative.is_even_length() {
                                continue;
                            }
                            if f == Family::D && is_very_even(&positive, &negative) {
                                for s in [1, 2] {
                                    out.push(ClassLabel::Classical { positive: positive.clone(), negative: negative.clone(), split: Some(s) });
                                }
                            } else {
                                out.push(ClassLabel::Classical { positive: positive.clone(), negative: negative.clone(), split: None });
                            }
                        }
                    }
                }
                out.sort();
                Ok(out)
            }
            f if self.is_enumerable() => {
                let _ = f;
                Ok(self.class_table()?.classes.iter().map(|c| c.label.clone()).collect())
            }
            f => Ok(tables::rows_for(f)
                .map(|r| ClassLabel::Exceptional { signature: r.signature(), disc: r.discriminator.clone() })
                .collect()),
        }
    }

    /// d_C and C_min.  Enumerable groups give the complete set; classical
    /// elliptic classes beyond that give the d_C formula and one element.
    pub fn min_length(&self, label: &ClassLabel) -> Result<MinLength> {
        self.validate_label(label)?;
        if self.is_enumerable() {
            let t = self.class_table()?;
            let c = t.find(label)?;
            return Ok(MinLength { d_c: c.d_c, elements: c.min_elements.clone(), complete: true });
        }
        match label {
            ClassLabel::CycleType(p) if p.len() == 1 => {
                let g = WeylElement::Perm(cycle_type_representative(p));
                Ok(MinLength { d_c: self.rank(), elements: vec![g], complete: false })
            }
            ClassLabel::Classical { positive, negative, .. } if positive.is_empty() => {
                let ty = if self.family() == Family::D { crate::elliptic::ClassicalType::D } else { crate::elliptic::ClassicalType::B };
                let d_c = crate::elliptic::d_c_classical(negative, ty)?;
                let g = WeylElement::Perm(crate::elliptic::w_from_partition(negative, 0));
                debug_assert_eq!(self.len_unchecked(&g), d_c);
                Ok(MinLength { d_c, elements: vec![g], complete: false })
            }
            ClassLabel::Exceptional { signature, disc } => {
                let row = tables::lookup(self.family(), signature, disc.as_ref())?;
                Ok(MinLength { d_c: row.d, elements: Vec::new(), complete: false })
            }
            _ => Err(Error::Budget { needed: self.descriptor().order().min(u64::MAX as u128) as u64, budget: crate::enumeration_budget() }),
        }
    }

    pub fn d_c(&self, label: &ClassLabel) -> Result<usize> {
        self.min_length(label).map(|m| m.d_c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_roundtrip() {
        for (s, f) in [("[];[2,1]", Family::B), ("[2,2];[]#1", Family::D), ("[3,1]", Family::A), ("2.2.6''", Family::F4), ("1.2#2", Family::G2)] {
            let l = ClassLabel::parse(s, f).unwrap();
            assert_eq!(l.to_string(), s);
        }
        for s in ["(2,1;1)", "([2,1];[1])", "(;2,2)"] {
            assert!(ClassLabel::parse(s, Family::C).is_ok(), "{s}");
        }
        assert_eq!(ClassLabel::parse("F4:2.2.6'", Family::F4).unwrap().to_string(), "2.2.6'");
        assert!(ClassLabel::parse("E6:3.12", Family::F4).is_err());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for (f, r) in [(Family::G2, 2), (Family::F4, 4), (Family::B, 3), (Family::D, 4), (Family::A, 4)] {
            let w = WeylGroup::of(f, r).unwrap();
            let t = w.class_table().unwrap();
            let total: usize = t.classes.iter().map(|c| c.size).sum();
            assert_eq!(total as u128, w.descriptor().order());
            assert_eq!(t.classes.len(), w.class_labels().unwrap().len(), "{f:?}");
        }
    }

    #[test]
    fn f4_pair_is_split() {
        let w = WeylGroup::of(Family::F4, 4).unwrap();
        let t = w.class_table().unwrap();
        let pair: Vec<_> = t.classes.iter().filter(|c| c.label.to_string().starts_with("2.2.6'")).collect();
        assert_eq!(pair.len(), 2);
        assert!(pair.iter().all(|c| c.elliptic && c.d_c == 10));
        assert_eq!(t.classes.len(), 25);
    }

    #[test]
    fn very_even_classes_of_d4() {
        let w = WeylGroup::of(Family::D, 4).unwrap();
        let t = w.class_table().unwrap();
        assert_eq!(t.classes.len(), 13);
        let a = ClassLabel::parse("[2,2];[]#1", Family::D).unwrap();
        let b = ClassLabel::parse("[2,2];[]#2", Family::D).unwrap();
        assert_eq!(t.find(&a).unwrap().size, t.find(&b).unwrap().size);
        let rep = WeylElement::Perm(signed_cycle_representative(&Partition::new(vec![2, 2]).unwrap(), &Partition::empty()));
        assert_eq!(w.class_of(&rep).unwrap(), a);
    }
}
