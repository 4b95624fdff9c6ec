//! Numerical checks of the integral conditions, the constant chain, the
//! parameter families and the witness and embedding experiments.

mod conditions;
mod experiments;
mod ledger;
mod power;
mod presets;

pub use conditions::{
    check_condition_1, check_condition_2, check_condition_3, BoundaryMargins, ConditionParams, ConditionReport,
    GridSpec, MarginPoint, ScanSpec, GROWTH_THRESHOLD,
};
pub use experiments::{
    boundedness_experiment, embedding_check, nontriviality_check, potential_envelope, BoundednessReport,
    EmbeddingReport, FunctionRatio, NontrivialityReport, Witness,
};
pub use ledger::{constant_ledger, ledger_from_reports, ConstantLedger, LedgerInputs};
pub use power::{power_case_relations, PowerPredictions, PowerRelations, Relation};
pub use presets::{
    balanced_power_preset, equal_exponent_preset, example_preset, power_preset, unbalanced_power_preset,
    ConstraintCheck, Preset, PresetParams,
};
