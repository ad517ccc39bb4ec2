//! Data-parallel versions of the enumeration primitives. Results do not
//! depend on the number of worker threads.

use std::collections::BTreeMap;

use ccc_forge_core::codes::{merge_histograms, CompositionTable, DefiningSet, WeightDistribution};
use ccc_forge_core::ExtField;
use rayon::prelude::*;

/// Messages per histogram task.
const HISTOGRAM_CHUNK: u64 = 1 << 12;
/// Table entries per transform task, at least.
const MIN_TASK_ENTRIES: usize = 1 << 14;

pub fn composition_table(field: &ExtField, set: &DefiningSet) -> CompositionTable {
    let mut table = CompositionTable::seed(field, set);
    let p = table.p();
    for level in 0..table.levels() {
        let len = table.block_len(level);
        table
            .counts_mut()
            .par_chunks_mut(len)
            .with_min_len((MIN_TASK_ENTRIES / len).max(1))
            .for_each_init(Vec::new, |scratch, block| CompositionTable::transform_block(p, level, block, scratch));
    }
    table
}

pub fn weight_histogram(table: &CompositionTable) -> BTreeMap<u64, u64> {
    let q = table.q();
    let parts: Vec<BTreeMap<u64, u64>> = (0..q.div_ceil(HISTOGRAM_CHUNK))
        .into_par_iter()
        .map(|i| {
            let start = i * HISTOGRAM_CHUNK;
            table.weight_histogram(start..(start + HISTOGRAM_CHUNK).min(q))
        })
        .collect();
    merge_histograms(parts)
}

/// A code together with the data its subcodes are measured from.
pub struct CodeData {
    pub set: DefiningSet,
    pub table: CompositionTable,
    pub distribution: WeightDistribution,
}

pub fn code_data(field: &ExtField, alpha: u32) -> CodeData {
    let set = DefiningSet::new(field, alpha);
    let table = composition_table(field, &set);
    let distribution = WeightDistribution::from_histogram(field.params(), table.len(), weight_histogram(&table));
    CodeData { set, table, distribution }
}
