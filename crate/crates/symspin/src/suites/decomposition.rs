//! Rank accounting, injectivity and the index triangle.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use symspin_core::decomposition::{Status, XiIndex};

use super::Context;
use crate::report::Record;

/// `Λ^i⊗S` is the direct sum of its components on every guard-band block.
pub fn direct_sum(ctx: &Context) -> Vec<Record> {
    let acc = ctx.decomposition.accounting(ctx.band());
    let bad = acc.iter().find(|a| a.rank != a.block_dim || a.component_dims.values().sum::<usize>() != a.block_dim);
    let mut per_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for a in &acc {
        *per_degree.entry(a.form_degree).or_default() += 1;
    }
    let status = match (bad, acc.len()) {
        (Some(_), _) => Status::Fail,
        (None, 0) => Status::Vacuous,
        _ => Status::Pass,
    };
    let mut details = json!({
        "band_limit": ctx.config.band_limit(),
        "blocks_per_form_degree": per_degree,
    });
    if let Some(a) = bad {
        details["failing_block"] = json!({
            "form_degree": a.form_degree,
            "weight": a.weight.values(),
            "parity": a.parity.as_str(),
            "block_dim": a.block_dim,
            "rank": a.rank,
            "component_dims": a.component_dims,
        });
    }
    vec![Record::new("direct-sum", "Lambda^i (x) S = sum_j E^(i,j) on each weight block", status, acc.len())
        .with_details(details)]
}

/// Every `X` step used to build a component and `Y` on the upper components
/// has full column rank on guard-band blocks.
pub fn injectivity(ctx: &Context) -> Vec<Record> {
    let limit = ctx.config.band_limit();
    let recs: Vec<_> = ctx.decomposition.injectivity_records().iter().filter(|r| r.top_degree <= limit).collect();
    let mut records = Vec::new();
    for (op, name, anchor) in [
        ("X", "x-injective", "X: E^(i,j) -> E^(i+1,j) is injective below the diagonal"),
        ("Y", "y-injective", "Y is injective on E^(i,j) for i > j"),
    ] {
        let mine: Vec<_> = recs.iter().filter(|r| r.operator == op).collect();
        let bad = mine.iter().find(|r| r.rank != r.dim);
        let status = match (bad, mine.len()) {
            (Some(_), _) => Status::Fail,
            (None, 0) => Status::Vacuous,
            _ => Status::Pass,
        };
        let details = match bad {
            Some(r) => json!({ "i": r.i, "j": r.j, "weight": r.weight.values(), "dim": r.dim, "rank": r.rank }),
            None => json!({ "band_limit": limit }),
        };
        records.push(Record::new(name, anchor, status, mine.len()).with_details(details));
    }
    records
}

/// Node count `(l+1)²` and column sizes `min(i, 2l−i) + 1`.
pub fn triangle(ctx: &Context) -> Vec<Record> {
    let l = ctx.space.l();
    let xi = XiIndex::new(l);
    let expected: Vec<usize> = (0..=2 * l).map(|i| i.min(2 * l - i) + 1).collect();
    let ok = xi.nodes().len() == (l + 1) * (l + 1) && xi.column_sizes() == expected;
    let status = if ok { Status::Pass } else { Status::Fail };
    vec![Record::new("triangle-shape", "index triangle has (l+1)^2 nodes in columns of size min(i,2l-i)+1", status, 1)
        .with_details(json!({ "nodes": xi.nodes().len(), "column_sizes": xi.column_sizes() }))]
}

/// The dimension table and the triangle adjacency.
pub fn artifacts(ctx: &Context) -> Value {
    let xi = XiIndex::new(ctx.space.l());
    let rows: Vec<Value> = ctx
        .decomposition
        .dimension_table()
        .into_iter()
        .map(|r| json!({ "i": r.i, "j": r.j, "parity": r.parity.as_str(), "top_degree": r.top_degree, "dim": r.dim }))
        .collect();
    let arrows: Vec<Value> = xi.arrows().into_iter().map(|(a, b)| json!({ "from": [a.0, a.1], "to": [b.0, b.1] })).collect();
    json!({
        "dimension_table": rows,
        "triangle": {
            "nodes": xi.nodes().into_iter().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
            "column_sizes": xi.column_sizes(),
            "arrows": arrows,
        },
    })
}
