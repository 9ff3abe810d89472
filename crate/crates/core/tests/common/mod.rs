#![allow(dead_code)]

use belief_decision::{MassFunction, Node};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const WHEEL1: &str = include_str!("../../data/wheel1.json");
pub const WHEEL2: &str = include_str!("../../data/wheel2.json");
pub const WHEEL_FEE: &str = include_str!("../../data/wheel_fee.json");
pub const OIL1: &str = include_str!("../../data/oil1.json");
pub const OIL2: &str = include_str!("../../data/oil2.json");

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Frame of up to `max_frame` distinct integer payoffs in [-20, 40] with up
/// to `max_focals` random nonempty focal elements.
pub fn random_mass(rng: &mut impl Rng, max_frame: usize, max_focals: usize) -> MassFunction {
    let mut pool: Vec<i32> = (-20..=40).collect();
    pool.shuffle(rng);
    let size = rng.random_range(1..=max_frame);
    let frame: Vec<f64> = pool[..size].iter().map(|&v| f64::from(v)).collect();
    let focals = rng.random_range(1..=max_focals);
    let subsets: Vec<Vec<f64>> = (0..focals)
        .map(|_| {
            let mask = rng.random_range(1..(1u32 << size));
            (0..size)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| frame[i])
                .collect()
        })
        .collect();
    let weights: Vec<f64> = (0..focals).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    MassFunction::new(
        frame,
        subsets.into_iter().zip(weights.iter().map(|w| w / total)),
    )
    .expect("generated mass function is valid")
}

/// Random tree with at most `max_strategies` pure strategies.
pub fn random_tree(rng: &mut impl Rng, max_strategies: f64) -> Node {
    let mut budget = max_strategies;
    let mut next_id = 0;
    grow(rng, 0, &mut budget, &mut next_id)
}

fn grow(rng: &mut impl Rng, depth: usize, budget: &mut f64, next_id: &mut usize) -> Node {
    let roll = rng.random_range(0..10);
    let arity = rng.random_range(2..=3);
    if depth >= 4 || roll < 2 {
        let n = rng.random_range(1..=3);
        return Node::leaf((0..n).map(|_| f64::from(rng.random_range(-100..=100)))).unwrap();
    }
    *next_id += 1;
    let id = format!("n{next_id}");
    if roll < 6 && *budget >= arity as f64 {
        *budget /= arity as f64;
        let branches: Vec<_> = (0..arity)
            .map(|k| {
                let cost = if rng.random_bool(0.3) {
                    f64::from(rng.random_range(0..20))
                } else {
                    0.0
                };
                (format!("a{k}"), cost, grow(rng, depth + 1, budget, next_id))
            })
            .collect();
        Node::decision(id, branches).unwrap()
    } else {
        let weights: Vec<f64> = (0..arity).map(|_| rng.random_range(0.05..1.0)).collect();
        let total: f64 = weights.iter().sum();
        let branches: Vec<_> = weights
            .iter()
            .enumerate()
            .map(|(k, w)| {
                (
                    format!("e{k}"),
                    w / total,
                    grow(rng, depth + 1, budget, next_id),
                )
            })
            .collect();
        Node::chance(id, branches).unwrap()
    }
}
