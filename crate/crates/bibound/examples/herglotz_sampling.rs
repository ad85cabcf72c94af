//! Sampling genuine positive-real-part functions from finite Herglotz
//! measures, and checking realizable constructions against the bounds.
//!
//! ```sh
//! cargo run --release --example herglotz_sampling
//! ```

use bibound::oracle::{sample_record, sample_seed, DEFAULT_ATOMS};
use bibound::{
    herglotz_sample, phi_preset, schwarz_from_p, sound_bounds, CaratheodoryAtoms, ClassKind,
    ClassSpec, MultiplierPsi, OperatorSpec, PhiPreset, SampleRecord,
};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Herglotz atoms -> positive-real-part expansions");
    println!("===============================================\n");

    // a single atom at angle 0 generates (1+z)/(1-z): every p_k = 2
    let atoms = CaratheodoryAtoms::new(vec![1.0], vec![0.0])?;
    let p = herglotz_sample(&atoms, 6);
    let coeffs: Vec<String> = (1..=4).map(|k| format!("{:.1}", p.coeff(k).re)).collect();
    println!("single atom at 0:  p_k = [{}]  (the half-plane map)", coeffs.join(", "));
    let u = schwarz_from_p(&p);
    println!("its Schwarz function: u_1 = {:.4}, u_2 = {:.4} (u = z exactly)\n", u.coeff(1).re, u.coeff(2).re);

    // opposite atoms cancel odd coefficients
    let atoms = CaratheodoryAtoms::new(vec![0.5, 0.5], vec![0.0, std::f64::consts::PI])?;
    let p = herglotz_sample(&atoms, 4);
    println!(
        "atoms at 0 and pi: p_1 = {:.1}, p_2 = {:.1}, p_3 = {:.1}  (odd terms vanish)\n",
        p.coeff(1).re,
        p.coeff(2).re,
        p.coeff(3).re
    );

    // coefficient bound |p_k| <= 2 holds for every draw
    let mut rng = StdRng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for _ in 0..20_000 {
        let atoms = CaratheodoryAtoms::random(DEFAULT_ATOMS, &mut rng);
        let p = herglotz_sample(&atoms, 10);
        for k in 1..=10 {
            worst = worst.max(p.coeff(k).norm());
        }
    }
    println!("20000 random draws: max |p_k| over k <= 10 is {worst:.12} (<= 2)\n");

    // verification against the Koebe/identity class bounds
    let spec = ClassSpec::new(
        ClassKind::B,
        Complex64::new(1.0, 0.0),
        0.0,
        OperatorSpec::identity(),
        phi_preset(PhiPreset::Koebe)?,
        MultiplierPsi::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))?,
    )?;
    let bounds = sound_bounds(&spec)?;
    println!(
        "sampling the Koebe/identity class: bounds |a2| <= {:.6}, |a3| <= {:.6}",
        bounds.0, bounds.1
    );
    let (mut max_a2, mut max_a3): (f64, f64) = (0.0, 0.0);
    let mut closest: Option<SampleRecord> = None;
    for i in 0..50_000 {
        let rec = sample_record(&spec, bounds, sample_seed(1, i), DEFAULT_ATOMS)?;
        if rec.abs_a2 > max_a2 {
            max_a2 = rec.abs_a2;
            closest = Some(rec);
        }
        max_a3 = max_a3.max(rec.abs_a3);
    }
    println!("50000 samples: max |a2| = {max_a2:.8}, max |a3| = {max_a3:.8} (both under the bounds)");
    if let Some(rec) = closest {
        println!(
            "closest |a2| sample: p1 = {:.4}+{:.4}i, p2 = {:.4}+{:.4}i, margin = {:.3e}",
            rec.p1.re, rec.p1.im, rec.p2.re, rec.p2.im, rec.margin_a2
        );
    }
    println!("\nCSV schema for verification runs:\n  {}", SampleRecord::CSV_HEADER);
    Ok(())
}
