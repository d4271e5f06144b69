//! Adapted bases for u_w⁻¹ and the bounds on dim N^k V.

use weylphi::field::{Field, Rational, F2};
use weylphi::isometry::{check_canonical_basis, lambda_bounds_check, FormedSpace};
use weylphi::partition::Partition;

fn show<F: Field>(name: &str, space: &FormedSpace<F>, p: &Partition) -> weylphi::Result<()> {
    let u = space.u_w(p, &vec![F::one(); p.size() as usize])?;
    let g = u.inverse().expect("unipotent");
    let cb = check_canonical_basis(space, &g, &space.standard_flag(), p)?;
    let lam = lambda_bounds_check(space, &g, p)?;
    println!("{name} char {} p={p}", F::characteristic());
    for (clause, ok) in &cb.clauses {
        println!("  {clause}: {ok}");
    }
    println!("  needs sqrt(-1): {}", cb.extended);
    println!("  dim N^k V = {:?}, bound {:?}, tight {}", lam.dims, lam.lambda, lam.tight);
    Ok(())
}

fn main() -> weylphi::Result<()> {
    let p: Partition = "2,1,1".parse()?;
    show("Sp8", &FormedSpace::<Rational>::symplectic(4), &p)?;
    show("SO9", &FormedSpace::<Rational>::orthogonal(4, 1), &p)?;
    show("SO9", &FormedSpace::<F2>::orthogonal(4, 1), &p)?;
    Ok(())
}
