//! |B w B ∩ γ| / |B| for the Coxeter class of Sp_4 at q = 2, 3, computed
//! from U ẇ T U without listing the group.

use weylphi::fq::{point_count_series, GroupKind};
use weylphi::unipotent::UnipotentLabel;
use weylphi::weyl::classes::ClassLabel;
use weylphi::weyl::Family;

fn main() -> weylphi::Result<()> {
    for c in ["[];[2]", "[];[1,1]"] {
        let c = ClassLabel::parse(c, Family::C)?;
        for g in ["4", "2,2"] {
            let r = point_count_series(GroupKind::Sp4, &c, &UnipotentLabel::jordan(g.parse()?), &[2, 3])?;
            println!("{} ({g}): ratios {:?}, fitted {:?}, consistent {:?}", r.class, r.ratios, r.fitted, r.consistent);
        }
    }
    Ok(())
}
