//! Excellent decompositions of w_{p*}⁻¹ in types B, C and D, checked
//! against the group: reduced, one odd palindrome per block, length d_C.

use weylphi::elliptic::{d_c_classical, excellent_decomposition, validate_excellent, w_from_partition, ClassicalType, Variant};
use weylphi::weyl::{WeylElement, WeylGroup};

fn main() -> weylphi::Result<()> {
    let cases = [
        (ClassicalType::C, "3,2,1", Variant::A),
        (ClassicalType::B, "2,2,1,1", Variant::B),
        (ClassicalType::D, "3,1", Variant::B),
        (ClassicalType::C, "4,4", Variant::A),
    ];
    for (ty, p, variant) in cases {
        let p: weylphi::partition::Partition = p.parse()?;
        let g = WeylGroup::of(ty.family(), p.size() as usize)?;
        let dec = excellent_decomposition(&p, ty, variant)?;
        let w = WeylElement::Perm(w_from_partition(&p, 0).inverse());
        let rep = validate_excellent(&dec, &w, &g)?;
        println!(
            "{}{} p={p}: {dec}  length {} (d_C = {}), valid: {}",
            ty.family(),
            g.rank(),
            rep.length,
            d_c_classical(&p, ty)?,
            rep.passed()
        );
    }
    Ok(())
}
