//! Closed-form coefficient bounds across the named target presets.
//!
//! ```sh
//! cargo run --example bounds_presets
//! ```

use bibound::{
    bound_report, corollary_bounds, phi_preset, ClassKind, ClassSpec, Corollary, MultiplierPsi,
    OperatorSpec, PhiPreset,
};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gamma = Complex64::new(1.0, 0.0);
    let psi = MultiplierPsi::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))?;
    let op = OperatorSpec::identity();

    println!("|a2| and |a3| bounds, identity operator, gamma = 1, psi = 1");
    println!("============================================================\n");

    let presets: [(&str, PhiPreset); 5] = [
        ("koebe", PhiPreset::Koebe),
        ("strongly-starlike a=1", PhiPreset::StronglyStarlike { alpha: 1.0 }),
        ("strongly-starlike a=1/2", PhiPreset::StronglyStarlike { alpha: 0.5 }),
        ("janowski A=1/2 B=-1/2", PhiPreset::Janowski { a: 0.5, b: -0.5 }),
        ("starlike-order b=1/4", PhiPreset::StarlikeOrder { beta: 0.25 }),
    ];

    println!("{:<26} {:>10} {:>10} | {:>10} {:>10}", "target", "B1", "B2", "|a2| <=", "|a3| <=");
    for (name, preset) in presets {
        let phi = phi_preset(preset)?;
        let spec = ClassSpec::new(ClassKind::B, gamma, 0.0, op, phi, psi)?;
        let report = bound_report(&spec);
        println!(
            "{:<26} {:>10.6} {:>10.6} | {:>10.6} {:>10.6}",
            name,
            phi.b1(),
            phi.b2(),
            report.a2_bound.unwrap(),
            report.a3_bound.unwrap()
        );
    }

    println!("\nthe lambda = 0 / lambda = 1 specializations (Koebe target):");
    let phi = phi_preset(PhiPreset::Koebe)?;
    for (name, which) in [
        ("lambda-zero-identity", Corollary::LambdaZeroIdentity),
        ("lambda-one-identity", Corollary::LambdaOneIdentity),
    ] {
        let r = corollary_bounds(which, gamma, &op, &phi, &psi)?;
        println!(
            "  {:<22} |a2| <= {:.6}   |a3| <= {:.6}",
            name,
            r.a2_bound.unwrap(),
            r.a3_bound.unwrap()
        );
    }

    println!("\nkind G at lambda = 0 reduces to the same |a2| bound:");
    let spec_g = ClassSpec::new(ClassKind::G, gamma, 0.0, op, phi, psi)?;
    let report_g = bound_report(&spec_g);
    println!(
        "  G family: |a2| <= {:.6} (printed |a3| bound {:.6}, derived {:.6})",
        report_g.a2_bound.unwrap(),
        report_g.a3_bound.unwrap(),
        report_g.a3_bound_derived.unwrap()
    );
    Ok(())
}
