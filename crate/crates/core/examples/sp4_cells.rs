//! Brute force in Sp_4(F_3): for each class C of W, the unipotent classes
//! meeting the cell of a minimal-length w, and the dominance-minimal one.

use weylphi::field::F3;
use weylphi::fq::{enumerate, minimal_class, GroupKind};

fn main() -> weylphi::Result<()> {
    let inst = enumerate::<F3>(GroupKind::Sp4)?;
    println!("Sp4(F3): {} elements, {} flags, {} unipotent", inst.elements().len(), inst.flags().len(), inst.unipotent_count());
    for c in inst.weyl.class_labels()? {
        let r = minimal_class(&c, &inst)?;
        println!("  {:<10} meets {:?}, minimal {:?}, Phi(C) = {}", r.class, r.meeting, r.minimal, r.expected);
    }
    Ok(())
}
