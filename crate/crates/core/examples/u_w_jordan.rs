//! The unipotent element u_w attached to an elliptic class, its Jordan type
//! in several characteristics and the position of the flag it moves.

use weylphi::field::{Field, Rational, F2, F3};
use weylphi::isometry::{rel_position, unipotent_label, w_p, FormedSpace};
use weylphi::partition::Partition;

fn show<F: Field>(name: &str, space: &FormedSpace<F>, p: &Partition) -> weylphi::Result<()> {
    let u = space.u_w(p, &vec![F::one(); p.size() as usize])?;
    let f0 = space.standard_flag();
    let pos = rel_position(&f0, &f0.transform(&u))?;
    println!(
        "{name} char {}: u_w has class {}; position of (F0, u_w F0) is w_p⁻¹: {}",
        F::characteristic(),
        unipotent_label(space, &u)?,
        pos == w_p(p, space.kappa()).inverse()
    );
    Ok(())
}

fn main() -> weylphi::Result<()> {
    let p: Partition = "2,1".parse()?;
    println!("p = {p}");
    show("Sp6", &FormedSpace::<Rational>::symplectic(3), &p)?;
    show("Sp6", &FormedSpace::<F2>::symplectic(3), &p)?;
    show("SO7", &FormedSpace::<Rational>::orthogonal(3, 1), &p)?;
    show("SO7", &FormedSpace::<F2>::orthogonal(3, 1), &p)?;
    show("SO7", &FormedSpace::<F3>::orthogonal(3, 1), &p)?;
    Ok(())
}
