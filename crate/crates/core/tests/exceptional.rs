use std::collections::BTreeSet;

use weylphi::elliptic::{validate_excellent, ExcellentDecomposition};
use weylphi::tables::{self, EXCELLENT_WORDS};
use weylphi::weyl::classes::ClassLabel;
use weylphi::weyl::{Family, WeylGroup};

fn group(f: Family) -> WeylGroup {
    WeylGroup::of(f, f.fixed_rank().unwrap()).unwrap()
}

#[test]
fn listed_words_are_excellent_and_match_table() {
    let mut seen = BTreeSet::new();
    for &(fam, word) in EXCELLENT_WORDS {
        let f: Family = fam.parse().unwrap();
        let g = group(f);
        let dec = ExcellentDecomposition::parse(word).unwrap();
        let w = g.element_from_word(&dec.word()).unwrap();
        let rep = validate_excellent(&dec, &w, &g).unwrap();
        assert!(rep.passed(), "{fam} {word}: {rep:?}");
        let ClassLabel::Exceptional { signature, disc } = g.class_of(&w).unwrap() else { panic!() };
        let row = tables::lookup(f, &signature, disc.as_ref()).unwrap();
        assert_eq!(row.d, dec.letters(), "{fam} {word}");
        assert_eq!(g.reflection_char_poly(&w).unwrap(), row.signature());
        assert!(seen.insert((fam, row.name.clone())), "{fam} {word} repeats a class");
    }
    assert_eq!(seen.len(), 17);
}

#[test]
fn elliptic_counts_match_table() {
    for (f, count) in [(Family::G2, 3), (Family::F4, 9), (Family::E6, 5)] {
        let g = group(f);
        let t = g.class_table().unwrap();
        let elliptic: Vec<_> = t.classes.iter().filter(|c| c.elliptic).collect();
        assert_eq!(elliptic.len(), count, "{f}");
        for c in elliptic {
            let ClassLabel::Exceptional { signature, disc } = &c.label else { panic!() };
            let row = tables::lookup(f, signature, disc.as_ref()).unwrap();
            assert_eq!(row.d, c.d_c, "{f} {}", c.label);
            assert!(g.det_one_minus_w(c.representative()).unwrap() > 0);
        }
    }
}
