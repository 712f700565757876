//! Sequential versus parallel execution of the data-parallel loops.
//!
//! ```text
//! cargo bench -p fundpoly --bench exec
//! ```

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fundpoly::channelsim::{run_trials_with, ChannelModel};
use fundpoly::code::gen::{cycle_union, random_cycle_code};
use fundpoly::code::wiberg9;
use fundpoly::structure::verify_vertex;
use fundpoly::vertexenum::{enumerate_vertices_with, halfgrid_oracle_with};
use fundpoly::{Exec, FundamentalPolytope, Limits, ParityCheckMatrix, Rational};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn codes() -> Vec<(&'static str, ParityCheckMatrix)> {
    vec![
        ("wiberg9", wiberg9()),
        ("triangles_3x3", cycle_union(&[3, 3, 3]).unwrap()),
        ("random_n10_r6", random_cycle_code(10, 6, 3).unwrap()),
    ]
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_vertices");
    for (name, h) in codes() {
        let p = FundamentalPolytope::build(&h).unwrap();
        for (mode, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(mode, name), &p, |b, p| {
                b.iter(|| enumerate_vertices_with(black_box(p), &Limits::default(), exec).unwrap())
            });
        }
    }
    g.finish();
}

fn halfgrid(c: &mut Criterion) {
    let mut g = c.benchmark_group("halfgrid_oracle");
    g.sample_size(10);
    for (name, h) in codes() {
        let p = FundamentalPolytope::build(&h).unwrap();
        for (mode, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(mode, name), &p, |b, p| {
                b.iter(|| halfgrid_oracle_with(black_box(p), &Limits::default(), exec).unwrap())
            });
        }
    }
    g.finish();
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_vertices");
    for (name, h) in codes() {
        let p = FundamentalPolytope::build(&h).unwrap();
        let verts = enumerate_vertices_with(&p, &Limits::default(), Exec::Sequential).unwrap();
        for (mode, exec) in MODES {
            g.bench_function(BenchmarkId::new(mode, name), |b| {
                b.iter(|| exec.map(verts.len(), |i| verify_vertex(&p, &verts[i])))
            });
        }
    }
    g.finish();
}

fn trials(c: &mut Criterion) {
    let mut g = c.benchmark_group("decode_trials_200");
    g.sample_size(10);
    let ch = ChannelModel::bsc(Rational::new(1, 10)).unwrap();
    for (name, h) in codes() {
        for (mode, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(mode, name), &h, |b, h| {
                b.iter(|| {
                    run_trials_with(black_box(h), &ch, 200, 1, &Limits::default(), exec).unwrap()
                })
            });
        }
    }
    g.finish();
}

criterion_group!(benches, enumeration, halfgrid, verification, trials);
criterion_main!(benches);
