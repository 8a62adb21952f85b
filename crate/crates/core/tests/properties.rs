use mcdm::analysis::{
    divergence_actual_exact, divergence_actual_mc, optimize_m, DmKind, MonteCarloConfig,
    TargetDistribution,
};
use mcdm::{coder, BitVector, CodebookSpec};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn target(p1: f64) -> TargetDistribution {
    TargetDistribution::new(p1).unwrap()
}

fn random_bits(rng: &mut ChaCha8Rng, len: usize) -> BitVector {
    (0..len).map(|_| rng.gen_bool(0.5)).collect()
}

#[test]
fn random_round_trips_at_long_blocks() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let t = target(0.422);
    for (n, trials) in [(100, 10_000), (500, 10_000), (1000, 10_000)] {
        let specs = [
            optimize_m(&DmKind::UpToWeight, n, &t).unwrap().spec,
            optimize_m(&DmKind::ConstantComposition, n, &t).unwrap().spec,
            CodebookSpec::from_weights(n, (n / 5..n / 2).step_by(7)).unwrap(),
        ];
        for i in 0..trials {
            let spec = &specs[i % specs.len()];
            let u = random_bits(&mut rng, spec.input_len());
            let c = coder::encode(spec, &u).unwrap();
            assert!(spec.contains(&c));
            assert_eq!(coder::decode(spec, &c, true).unwrap(), u, "n={n}");
        }
    }
}

#[test]
fn encoder_matches_interval_oracle_on_random_long_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let spec = CodebookSpec::weight_range(300, 40, 130).unwrap();
    let k = spec.input_len();
    for _ in 0..200 {
        let u = random_bits(&mut rng, k);
        let index = (u.nbc() * spec.size()) >> k;
        assert_eq!(coder::encode(&spec, &u).unwrap(), spec.unrank(&index).unwrap());
    }
}

#[test]
fn exact_divergence_matches_unrank_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..40 {
        let n = rng.gen_range(1..=14);
        let weights: Vec<usize> = (0..=n).filter(|_| rng.gen_bool(0.35)).collect();
        let Ok(spec) = CodebookSpec::from_weights(n, weights) else {
            continue;
        };
        let t = target(rng.gen_range(0.05..0.95));
        let k = spec.input_len();
        let mut total = 0.0;
        let mut ones = 0usize;
        for v in 0u64..1 << k {
            let index = (BigUint::from(v) * spec.size()) >> k;
            let c = spec.unrank(&index).unwrap();
            total += t.log2_word_prob(n, c.weight());
            ones += c.weight();
        }
        let count = (1u64 << k) as f64;
        let brute = (-(k as f64) - total / count) / n as f64;
        let stats = divergence_actual_exact(&spec, &t, 24).unwrap();
        assert!((stats.divergence - brute).abs() < 1e-12, "{spec:?}");
        assert!((stats.pc1 - ones as f64 / (count * n as f64)).abs() < 1e-12);
    }
}

#[test]
fn monte_carlo_is_unbiased_across_seeds() {
    let spec = CodebookSpec::weight_range(18, 0, 7).unwrap();
    let t = target(0.3);
    let exact = divergence_actual_exact(&spec, &t, 24).unwrap().divergence;
    let seeds = 20;
    let mean = (0..seeds)
        .map(|seed| {
            let config = MonteCarloConfig {
                samples: 5_000,
                seed,
                workers: 2,
            };
            divergence_actual_mc(&spec, &t, &config).unwrap().divergence
        })
        .sum::<f64>()
        / seeds as f64;
    assert!((mean - exact).abs() / exact <= 0.01, "mean {mean} exact {exact}");
}

#[test]
fn std_error_tracks_seed_spread() {
    let spec = CodebookSpec::weight_range(40, 0, 15).unwrap();
    let t = target(0.422);
    let estimates: Vec<_> = (0..12)
        .map(|seed| {
            let config = MonteCarloConfig {
                samples: 4_000,
                seed,
                workers: 4,
            };
            divergence_actual_mc(&spec, &t, &config).unwrap()
        })
        .collect();
    let mean = estimates.iter().map(|e| e.divergence).sum::<f64>() / 12.0;
    let spread = (estimates
        .iter()
        .map(|e| (e.divergence - mean).powi(2))
        .sum::<f64>()
        / 11.0)
        .sqrt();
    let reported = estimates.iter().map(|e| e.std_error).sum::<f64>() / 12.0;
    assert!(spread < 2.5 * reported && spread > 0.4 * reported, "{spread} vs {reported}");
}
