//! Wall-clock timing of the main operations over seeded random DFAs,
//! emitted as CSV for scripted consumption.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use colex::abwt::build_abwt;
use colex::index::Index;
use colex::order::{chain_partition, compute_max_colex_order, dfa_width};
use colex::powerset::powerset_construct;
use colex::random::{random_trim_dfa, random_word};

pub fn run(seed: u64) {
    println!("op,n,e,sigma,p,wall_ns");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &target_n in &[10usize, 20, 40, 60] {
        let sigma = 4;
        let d = loop {
            let candidate = random_trim_dfa(&mut rng, target_n, sigma);
            if candidate.state_count() * 3 >= target_n * 2 {
                break candidate;
            }
        };
        let n = d.state_count();
        let e = d.edges().len();

        let started = Instant::now();
        let po = compute_max_colex_order(&d);
        row("order", n, e, sigma, 0, started);

        let started = Instant::now();
        let cp = chain_partition(&po);
        let p = cp.width();
        row("chains", n, e, sigma, p, started);

        let started = Instant::now();
        let (_, cp) = dfa_width(&d);
        let abwt = build_abwt(&d, &po, &cp).expect("max order builds");
        row("abwt_build", n, e, sigma, p, started);

        let started = Instant::now();
        let ix = Index::build(&abwt).expect("index builds");
        row("index_build", n, e, sigma, p, started);

        let patterns: Vec<_> = (0..200)
            .map(|_| random_word(&mut rng, d.alphabet(), 12))
            .collect();
        let started = Instant::now();
        let mut total = 0usize;
        for w in &patterns {
            total += ix.count(w);
        }
        std::hint::black_box(total);
        row("index_count_200", n, e, sigma, p, started);

        let started = Instant::now();
        let pow = powerset_construct(&d, 1 << 20).expect("DFA determinization");
        std::hint::black_box(pow.stats.q_star);
        row("powerset", n, e, sigma, p, started);
    }
}

fn row(op: &str, n: usize, e: usize, sigma: usize, p: usize, started: Instant) {
    println!("{op},{n},{e},{sigma},{p},{}", started.elapsed().as_nanos());
}
