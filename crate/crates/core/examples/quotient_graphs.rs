//! Quotients Cay(F_2; S)/~_l by both constructions, with a DOT export.

use cayley_circles::freegroup::ReducedWord;
use cayley_circles::multigraph::{export_dot, DotOptions};
use cayley_circles::quotients::{
    build_quotient_enum, build_quotient_local, full_generating_set, reduced_word_count,
    DEFAULT_ENUM_BUDGET,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = ReducedWord::parse("aabb", 2)?;
    for level in 1..=4 {
        let local = build_quotient_local(2, std::slice::from_ref(&s), level)?;
        let reference = build_quotient_enum(2, std::slice::from_ref(&s), level, DEFAULT_ENUM_BUDGET)?;
        assert_eq!(local, reference);
        assert_eq!(local.graph().vertex_count() as u64, reduced_word_count(2, level));
        println!(
            "C/~{level}: {} vertices, cycle: {}",
            local.graph().vertex_count(),
            local.graph().is_cycle()
        );
    }

    let x = build_quotient_local(2, &full_generating_set(&s), 1)?;
    let circle = x
        .graph()
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| matches!(e.tag.as_deref(), Some("aabb" | "BBAA")))
        .map(|(i, _)| i)
        .collect();
    print!("{}", export_dot(x.graph(), &DotOptions { highlight: circle, edge_labels: true }));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quotient example");
}
