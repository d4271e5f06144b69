//! Elliptic classes of the exceptional Weyl groups and their unipotent classes.
//!
//! Each row records d_C, the characteristic polynomial on the reflection
//! representation, the unipotent class name and whether that class is
//! distinguished.  Tilde components (short roots) are written `~A_1`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::CyclotomicSignature;
use crate::weyl::classes::Discriminator;
use crate::weyl::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Dist {
    Always,
    OnlyP(u32),
    Never,
}

impl From<Dist> for String {
    fn from(d: Dist) -> String {
        match d {
            Dist::Always => "always".into(),
            Dist::OnlyP(p) => format!("p={p}"),
            Dist::Never => "none".into(),
        }
    }
}

impl TryFrom<String> for Dist {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        match s.as_str() {
            "always" => Ok(Dist::Always),
            "none" => Ok(Dist::Never),
            _ => s
                .strip_prefix("p=")
                .and_then(|p| p.parse().ok())
                .map(Dist::OnlyP)
                .ok_or_else(|| Error::Parse(format!("bad distinguished marker {s:?}"))),
        }
    }
}

impl Dist {
    pub fn holds(self, char_p: u32) -> bool {
        match self {
            Dist::Always => true,
            Dist::OnlyP(p) => p == char_p,
            Dist::Never => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: Family,
    pub d: usize,
    pub signature: Vec<(u32, u32)>,
    pub discriminator: Option<Discriminator>,
    pub name: String,
    pub dist: Dist,
}

impl TableRow {
    pub fn signature(&self) -> CyclotomicSignature {
        CyclotomicSignature::from_pairs(&self.signature)
    }
}

// family, d_C, dotted signature, discriminator, class, distinguished
const RAW: &[(&str, usize, &str, &str, &str, &str)] = &[
    ("G2", 2, "6", "", "G_2", "always"),
    ("G2", 4, "3", "", "G_2(a_1)", "always"),
    ("G2", 6, "2.2", "", "~A_1", "p=3"),
    ("F4", 4, "12", "", "F_4", "always"),
    ("F4", 6, "8", "", "F_4(a_1)", "always"),
    ("F4", 8, "6.6", "", "F_4(a_2)", "always"),
    ("F4", 10, "2.2.6", "'", "B_3", "none"),
    ("F4", 10, "2.2.6", "''", "C_3", "none"),
    ("F4", 12, "4.4", "", "F_4(a_3)", "always"),
    ("F4", 14, "2.2.4", "", "C_3(a_1)", "p=2"),
    ("F4", 16, "3.3", "", "~A_2+A_1", "p=2"),
    ("F4", 24, "2.2.2.2", "", "A_1+~A_1", "none"),
    ("E6", 6, "3.12", "", "E_6", "always"),
    ("E6", 8, "9", "", "E_6(a_1)", "always"),
    ("E6", 12, "3.6.6", "", "A_5+A_1", "always"),
    ("E6", 14, "2.2.3.6", "", "A_5", "none"),
    ("E6", 24, "3.3.3", "", "2A_2+A_1", "none"),
    ("E7", 7, "2.18", "", "E_7", "always"),
    ("E7", 9, "2.14", "", "E_7(a_1)", "always"),
    ("E7", 11, "2.6.12", "", "E_7(a_2)", "always"),
    ("E7", 13, "2.6.10", "", "D_6+A_1", "always"),
    ("E7", 15, "2.2.2.10", "", "D_6", "none"),
    ("E7", 17, "2.4.8", "", "D_6(a_1)+A_1", "always"),
    ("E7", 21, "2.6.6.6", "", "D_6(a_2)+A_1", "always"),
    ("E7", 23, "2.2.2.6.6", "", "D_6(a_2)", "none"),
    ("E7", 25, "2.3.3.6", "", "(A_5+A_1)''", "none"),
    ("E7", 31, "2.2.2.2.2.6", "", "D_4+A_1", "none"),
    ("E7", 33, "2.2.2.4.4", "", "A_3+A_2+A_1", "none"),
    ("E7", 63, "2.2.2.2.2.2.2", "", "4A_1", "none"),
    ("E8", 8, "30", "", "E_8", "always"),
    ("E8", 10, "24", "", "E_8(a_1)", "always"),
    ("E8", 12, "20", "", "E_8(a_2)", "always"),
    ("E8", 14, "6.18", "", "E_7+A_1", "always"),
    ("E8", 16, "15", "", "D_8", "always"),
    ("E8", 16, "2.2.18", "", "E_7", "none"),
    ("E8", 18, "2.2.14", "", "E_7(a_1)+A_1", "always"),
    ("E8", 20, "12.12", "", "D_8(a_1)", "always"),
    ("E8", 22, "4.4.12", "", "D_7", "none"),
    ("E8", 22, "6.6.12", "", "E_7(a_2)+A_1", "always"),
    ("E8", 24, "10.10", "", "A_8", "always"),
    ("E8", 24, "2.2.6.12", "", "E_7(a_2)", "none"),
    ("E8", 26, "3.3.12", "", "E_6+A_1", "none"),
    ("E8", 26, "2.2.6.10", "", "D_7(a_1)", "p=2"),
    ("E8", 28, "3.9", "", "D_8(a_3)", "always"),
    ("E8", 30, "8.8", "", "A_7", "p=3"),
    ("E8", 32, "2.2.2.2.10", "", "D_6", "none"),
    ("E8", 34, "2.2.4.8", "", "D_5+A_2", "p=2"),
    ("E8", 40, "6.6.6.6", "", "2A_4", "always"),
    ("E8", 42, "2.2.6.6.6", "", "A_5+A_2", "none"),
    ("E8", 44, "2.2.2.2.6.6", "", "D_6(a_2)", "none"),
    ("E8", 44, "3.3.6.6", "", "A_5+2A_1", "none"),
    ("E8", 46, "2.2.3.3.6", "", "(A_5+A_1)'", "none"),
    ("E8", 46, "2.2.4.4.6", "", "D_5(a_1)+A_2", "none"),
    ("E8", 48, "5.5", "", "A_4+A_3", "none"),
    ("E8", 60, "4.4.4.4", "", "2A_3", "none"),
    ("E8", 64, "2.2.2.2.2.2.6", "", "D_4+A_1", "none"),
    ("E8", 66, "2.2.2.2.4.4", "", "A_3+A_2+A_1", "none"),
    ("E8", 80, "3.3.3.3", "", "2A_2+2A_1", "none"),
    ("E8", 120, "2.2.2.2.2.2.2.2", "", "4A_1", "none"),
];

/// Excellent decompositions of minimal length elliptic elements, one per
/// elliptic class; each parenthesized group is a palindromic block.
pub const EXCELLENT_WORDS: &[(&str, &str)] = &[
    ("G2", "(1)(2)"),
    ("G2", "(121)(2)"),
    ("G2", "(12121)(2)"),
    ("F4", "(1)(2)(3)(4)"),
    ("F4", "(1)(232)(3)(4)"),
    ("F4", "(121)(323)(4)(3)"),
    ("F4", "(1)(2)(3234323)(4)"),
    ("F4", "(4)(3)(2321232)(1)"),
    ("F4", "(12321)(23432)(3)(4)"),
    ("F4", "(2)(12321)(3234323)(4)"),
    ("F4", "(2324312134232)(3)(1)(4)"),
    ("F4", "(432134232431234)(12321)(232)(3)"),
    ("E6", "(1)(2)(3)(4)(5)(6)"),
    ("E6", "(1)(3)(4)(2)(454)(6)"),
    ("E6", "(1)(3)(4)(2345432)(6)(5)"),
    ("E6", "(1)(2)(3)(432454234)(5)(6)"),
    ("E6", "(4354132456542314534)(2)(1)(3)(5)(6)"),
];

/// Blocks of 1-based generator indices from a string such as `(121)(2)`.
pub fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>> {
    if !s.trim().ends_with(')') {
        return Err(Error::Parse(format!("unterminated block in {s:?}")));
    }
    let mut blocks = Vec::new();
    for chunk in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
        let body = chunk
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("block {chunk:?} in {s:?} lacks '('")))?;
        let block = body
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&d| d > 0))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse(format!("bad block {body:?}")))?;
        if block.is_empty() {
            return Err(Error::Parse(format!("empty block in {s:?}")));
        }
        blocks.push(block);
    }
    Ok(blocks)
}

pub fn rows() -> &'static [TableRow] {
    static ROWS: OnceLock<Vec<TableRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        RAW.iter()
            .map(|&(fam, d, sig, disc, name, dist)| {
                let signature: CyclotomicSignature = sig.parse().expect("table signature");
                TableRow {
                    family: fam.parse().expect("table family"),
                    d,
                    signature: signature.pairs(),
                    discriminator: match disc {
                        "'" => Some(Discriminator::Prime),
                        "''" => Some(Discriminator::DoublePrime),
                        _ => None,
                    },
                    name: name.to_string(),
                    dist: Dist::try_from(dist.to_string()).expect("table marker"),
                }
            })
            .collect()
    })
}

pub fn rows_for(family: Family) -> impl Iterator<Item = &'static TableRow> {
    rows().iter().filter(move |r| r.family == family)
}

/// Canonical JSON of the whole table.
pub fn to_json() -> String {
    serde_json::to_string(rows()).expect("table serializes")
}

pub fn checksum() -> String {
    Sha256::digest(to_json().as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn lookup(family: Family, signature: &CyclotomicSignature, disc: Option<&Discriminator>) -> Result<&'static TableRow> {
    let matches: Vec<&TableRow> = rows_for(family).filter(|r| &r.signature() == signature).collect();
    match matches.as_slice() {
        [] => Err(Error::NotFound(format!("no elliptic class of W({family}) with polynomial {signature}"))),
        [row] if disc.is_none() || disc == row.discriminator.as_ref() => Ok(row),
        [_] => Err(Error::NotFound(format!("{signature} in W({family}) takes no discriminator {disc:?}"))),
        many => match disc {
            None => Err(Error::Ambiguous(format!("{signature} in W({family}) needs a ' or '' discriminator"))),
            Some(d) => many
                .iter()
                .find(|r| r.discriminator.as_ref() == Some(d))
                .copied()
                .ok_or_else(|| Error::NotFound(format!("{signature}{d} in W({family})"))),
        },
    }
}

pub fn lookup_name(family: Family, name: &str) -> Option<&'static TableRow> {
    rows_for(family).find(|r| r.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksum_is_pinned() {
        // changes whenever a transcribed row changes
        assert_eq!(checksum(), "040a233f85c502bbe08bfd05617f6b999a4ccb8407adced5f2d69ffcb39e9e02");
    }

    #[test]
    fn row_counts() {
        let counts: Vec<usize> =
            [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8].iter().map(|&f| rows_for(f).count()).collect();
        assert_eq!(counts, vec![3, 9, 5, 12, 30]);
    }

    #[test]
    fn degrees_equal_rank_and_keys_unique() {
        for r in rows() {
            assert_eq!(r.signature().degree() as usize, r.family.fixed_rank().unwrap(), "{r:?}");
            assert!(!r.signature().has_eigenvalue_one());
            let same = rows_for(r.family).filter(|s| s.signature == r.signature && s.discriminator == r.discriminator);
            assert_eq!(same.count(), 1, "{r:?}");
        }
    }

    #[test]
    fn lookups() {
        let g = lookup(Family::G2, &"3".parse().unwrap(), None).unwrap();
        assert_eq!((g.d, g.name.as_str(), g.dist), (4, "G_2(a_1)", Dist::Always));
        let e7 = lookup(Family::E7, &"2.2.2.2.2.2.2".parse().unwrap(), None).unwrap();
        assert_eq!((e7.d, e7.name.as_str()), (63, "4A_1"));
        let e8 = lookup(Family::E8, &"15".parse().unwrap(), None).unwrap();
        assert_eq!((e8.d, e8.name.as_str(), e8.dist), (16, "D_8", Dist::Always));
        let f4: CyclotomicSignature = "2.2.6".parse().unwrap();
        assert!(matches!(lookup(Family::F4, &f4, None), Err(Error::Ambiguous(_))));
        assert_eq!(lookup(Family::F4, &f4, Some(&Discriminator::DoublePrime)).unwrap().name, "C_3");
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_blocks("(121)(2)").unwrap(), vec![vec![1, 2, 1], vec![2]]);
        assert!(parse_blocks("(12").is_err());
        for (_, w) in EXCELLENT_WORDS {
            for b in parse_blocks(w).unwrap() {
                assert!(b.iter().eq(b.iter().rev()), "{w}");
            }
        }
    }
}
