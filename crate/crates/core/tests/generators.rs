use ocl_core::generators::{
    attach_predictions, gen_crown, gen_kk_blocks, gen_random, CrownVariant, PredictionModel,
};
use ocl_core::io::write_instance;
use ocl_core::oracle::{Oracle, OracleLimits};
use ocl_core::{run, FirstFit};

#[test]
fn crown_a_forces_n_colors() {
    let oracle = Oracle::default();
    for n in 2..=6 {
        let inst = gen_crown(n, CrownVariant::MinusMatching).unwrap();
        assert_eq!(oracle.chromatic_number(inst.graph()).unwrap(), 2);
        assert_eq!(run(&mut FirstFit::new(), &inst).unwrap().distinct_colors, n);
    }
}

#[test]
fn kk_blocks_oracle_values() {
    let oracle = Oracle::new(OracleLimits::uniform(16));
    for k in 2..=4 {
        let inst = gen_kk_blocks(k).unwrap();
        assert_eq!(oracle.chromatic_number(inst.graph()).unwrap(), k);
        assert_eq!(oracle.prediction_error(&inst).unwrap().eta, k * (k - 1));
    }
}

#[test]
fn generation_is_reproducible() {
    let oracle = Oracle::default();
    for seed in 0..20 {
        let make = || {
            let inst = gen_random(12, 0.4, seed).unwrap();
            let inst = attach_predictions(inst, &PredictionModel::Corrupted { rate: 0.5 }, seed, &oracle)
                .unwrap();
            write_instance(&inst)
        };
        assert_eq!(make(), make());
    }
}

#[test]
fn corruption_rate_is_respected() {
    let oracle = Oracle::default();
    for rate in [0.1, 0.3, 0.5, 0.9] {
        let (mut changed, mut total) = (0usize, 0usize);
        for seed in 0..100 {
            let inst = gen_random(12, 0.4, seed).unwrap();
            let perfect = attach_predictions(inst.clone(), &PredictionModel::Perfect, seed, &oracle).unwrap();
            let noisy = attach_predictions(inst, &PredictionModel::Corrupted { rate }, seed, &oracle).unwrap();
            let (a, b) = (perfect.predictions().unwrap(), noisy.predictions().unwrap());
            changed += a.iter().zip(b).filter(|(x, y)| x != y).count();
            total += a.len();
        }
        assert!(total >= 1000);
        let observed = changed as f64 / total as f64;
        assert!((observed - rate).abs() <= 0.1, "rate {rate}: observed {observed}");
    }
}
