//! Φ on every class of W(C_3) and on the elliptic classes of W(E_6).

use weylphi::phi::{elliptic_labels, phi_full};
use weylphi::unipotent::is_distinguished;
use weylphi::weyl::{Family, WeylGroup};

fn main() -> weylphi::Result<()> {
    let c3 = WeylGroup::of(Family::C, 3)?;
    for ch in [0, 2] {
        println!("W(C3), char {ch}");
        for l in c3.class_labels()? {
            let u = phi_full(&c3, &l, ch)?;
            println!("  {:<12} d_C {:<2} -> {u}{}", l.to_string(), c3.d_c(&l)?, if is_distinguished(&u, Family::C, ch)? { "  distinguished" } else { "" });
        }
    }
    let e6 = WeylGroup::of(Family::E6, 6)?;
    println!("W(E6), elliptic");
    for l in elliptic_labels(&e6)? {
        println!("  {:<12} d_C {:<2} -> {}", l.to_string(), e6.d_c(&l)?, phi_full(&e6, &l, 0)?);
    }
    Ok(())
}
