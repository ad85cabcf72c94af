//! The core check: brute-force maxima over the relaxed feasible set
//! reproduce every closed-form bound.
//!
//! The bound derivation works on the set `|p1|, |p2|, |q2| <= 2` with
//! `q1 = -p1` and is tight there, so scanning that set must land exactly on
//! the closed forms within rounding.
//!
//! ```sh
//! cargo run --release --example oracle_equivalence
//! ```

use bibound::{
    phi_preset, relaxed_max_a2, relaxed_max_a3, sound_bounds, ClassKind, ClassSpec,
    MultiplierPsi, OperatorSpec, PhiPreset, TargetPhi,
};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let koebe = phi_preset(PhiPreset::Koebe)?;
    let unit_psi = MultiplierPsi::new(c(1.0, 0.0), c(0.0, 0.0))?;
    let shifted_psi = MultiplierPsi::new(c(0.8, 0.3), c(0.2, -0.4))?;
    let custom_phi = TargetPhi::new(1.4, -0.6, None)?;

    let specs = [
        (
            "B, Koebe, identity, lambda=0",
            ClassSpec::new(ClassKind::B, c(1.0, 0.0), 0.0, OperatorSpec::identity(), koebe, unit_psi)?,
        ),
        (
            "B, Koebe, identity, lambda=1",
            ClassSpec::new(ClassKind::B, c(1.0, 0.0), 1.0, OperatorSpec::identity(), koebe, unit_psi)?,
        ),
        (
            "B, custom phi/psi, libera nu=1.5",
            ClassSpec::new(
                ClassKind::B,
                c(1.2, -0.7),
                0.6,
                OperatorSpec::libera_bernardi(1.5)?,
                custom_phi,
                shifted_psi,
            )?,
        ),
        (
            "G, Koebe, identity, lambda=0",
            ClassSpec::new(ClassKind::G, c(1.0, 0.0), 0.0, OperatorSpec::identity(), koebe, unit_psi)?,
        ),
        (
            "G, custom phi/psi, jks sigma=1.2",
            ClassSpec::new(
                ClassKind::G,
                c(0.9, 0.5),
                0.35,
                OperatorSpec::jung_kim_srivastava(1.2)?,
                custom_phi,
                shifted_psi,
            )?,
        ),
    ];

    println!("relaxed-feasible brute force vs closed forms (grid 17, 1e4 random points)");
    println!("==========================================================================\n");
    println!(
        "{:<36} {:>12} {:>12} {:>9}",
        "spec", "scan max", "closed form", "|diff|"
    );
    for (name, spec) in &specs {
        let (bound_a2, bound_a3) = sound_bounds(spec)?;
        let got_a2 = relaxed_max_a2(spec, 17, 0)?;
        let got_a3 = relaxed_max_a3(spec, 17, 0)?;
        println!(
            "{:<36} {:>12.8} {:>12.8} {:>9.2e}  (|a2|)",
            name,
            got_a2,
            bound_a2,
            (got_a2 - bound_a2).abs()
        );
        println!(
            "{:<36} {:>12.8} {:>12.8} {:>9.2e}  (|a3|)",
            "",
            got_a3,
            bound_a3,
            (got_a3 - bound_a3).abs()
        );
    }
    println!("\nKoebe/identity reference values: |a2| bound sqrt(2), |a3| bound 5 at lambda = 0.");
    Ok(())
}
