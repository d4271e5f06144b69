//! Stabilizers of (g, B) with g in the cell of an elliptic w.

use weylphi::field::{F2, F3};
use weylphi::fq::{enumerate, isotropy_check, GroupKind};
use weylphi::phi::elliptic_labels;

fn main() -> weylphi::Result<()> {
    let sp = enumerate::<F3>(GroupKind::Sp4)?;
    let sl = enumerate::<F2>(GroupKind::Sl3)?;
    for c in elliptic_labels(&sp.weyl)? {
        let r = isotropy_check(&c, &sp)?;
        println!("{} {}: orders {:?}, bound {}, abelian {}", r.group, r.class, r.orders, r.bound, r.all_abelian);
    }
    for c in elliptic_labels(&sl.weyl)? {
        let r = isotropy_check(&c, &sl)?;
        println!("{} {}: orders {:?}, bound {}, abelian {}", r.group, r.class, r.orders, r.bound, r.all_abelian);
    }
    Ok(())
}
