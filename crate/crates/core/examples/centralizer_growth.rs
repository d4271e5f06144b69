//! Centralizer orders in Sp_4(F_q) for q = 3, 5, 7 of the unipotent classes
//! meeting an elliptic cell; the growth degree is at most d_C, with
//! equality only at Φ(C).

use weylphi::fq::c_small_check;
use weylphi::phi::elliptic_labels;
use weylphi::weyl::{Family, WeylGroup};

fn main() -> weylphi::Result<()> {
    let w = WeylGroup::of(Family::C, 2)?;
    for c in elliptic_labels(&w)? {
        let r = c_small_check(&c, &[3, 5, 7])?;
        println!("{} (d_C = {})", r.class, r.d_c);
        for row in &r.rows {
            println!("  {:<6} |Z| {:?}  degree {:?}  Lie dim {}  Phi(C): {}", row.unipotent, row.counts, row.degree, row.lie_dim, row.is_phi);
        }
    }
    Ok(())
}
