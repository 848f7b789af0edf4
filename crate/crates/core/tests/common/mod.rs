#![allow(dead_code)]

use tourfvs_core::generators;
use tourfvs_core::{GeneratorSpec, Tournament};

pub struct Instance {
    pub name: String,
    pub t: Tournament,
}

const NAMED: &[&str] = &[
    "tt(1)",
    "tt(2)",
    "tt(3)",
    "tt(5)",
    "tt(8)",
    "tt(12)",
    "tt(16)",
    "c3",
    "rt5",
    "st6",
    "st7",
    "pq(c3)",
    "pq(rt5)",
    "pq(st6)",
    "pq(st7)",
    "pq(pq(c3))",
    "pq(pq(st7))",
    "pq(pq(pq(st7)))",
    "pq(circular(11,1,3,4,5,9))",
    "sum(c3,c3)",
    "copies(c3,4)",
    "copies(c3,5)",
    "sum(st7,c3)",
    "sum(st6,st6)",
    "sum(tt(2),st7,tt(3))",
    "copies(st7,2)",
    "reverse(st7)",
    "reverse(pq(st6))",
    "reverse(u(10))",
    "circular(9,1,3,4,7)",
    "circular(9,1,2,3,4)",
    "circular(11,1,3,4,5,9)",
    "circular(11,1,2,3,4,5)",
    "circular(13,1,2,3,4,5,6)",
    "circular(13,1,3,5,7,9,11)",
    "circular(15,1,2,3,4,5,6,7)",
];

/// Every named generator instance with at most `max_n` vertices, plus the
/// three-FVS family.
pub fn generator_instances(max_n: usize) -> Vec<Instance> {
    let mut out: Vec<Instance> = NAMED
        .iter()
        .map(|s| {
            let spec: GeneratorSpec = s.parse().unwrap();
            Instance { name: s.to_string(), t: spec.build().unwrap() }
        })
        .collect();
    for n in 3..=max_n {
        out.push(Instance { name: format!("u({n})"), t: generators::u_family(n).unwrap() });
    }
    out.retain(|i| i.t.n() <= max_n);
    out
}

/// `count` seeded random tournaments, seed `s` having `1 + s % max_n` vertices.
pub fn random_instances(count: u64, max_n: usize) -> Vec<Instance> {
    (0..count)
        .map(|seed| {
            let n = 1 + (seed % max_n as u64) as usize;
            Instance { name: format!("random({n},{seed})"), t: generators::random(n, seed) }
        })
        .collect()
}

/// Generators and 1000 random tournaments with `n <= min(max_n, 12)`, plus
/// 200 random ones of order 13..=max_n when `max_n > 12`.
pub fn corpus(max_n: usize) -> Vec<Instance> {
    let mut out = generator_instances(max_n);
    out.extend(random_instances(1000, max_n.min(12)));
    if max_n > 12 {
        let span = (max_n - 12) as u64;
        out.extend((0..200u64).map(|i| {
            let seed = 10_000 + i;
            let n = 13 + (i % span) as usize;
            Instance { name: format!("random({n},{seed})"), t: generators::random(n, seed) }
        }));
    }
    out
}
