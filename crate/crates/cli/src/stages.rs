//! Stage files for the noise-budget command: one `gain_db, noise_temp` pair
//! per line, `#` comments. The gain takes an optional `dB` suffix, the
//! temperature an optional `K`/`mK` suffix (kelvin when unsuffixed).

use std::path::Path;

use spakit_core::paramp::ChainStage;

use crate::units::{parse_db, parse_temperature};

/// Loads an ordered stage list. Error strings carry the offending line
/// number.
pub fn load_stages(path: &Path) -> Result<Vec<ChainStage>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read stage file {}: {e}", path.display()))?;
    let mut stages = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (gain, temp) = line.split_once(',').ok_or_else(|| {
            format!("stage file line {line_no}: expected 'gain_db, noise_temp', got '{raw_line}'")
        })?;
        let gain_db = parse_db(gain).map_err(|e| format!("stage file line {line_no}: {e}"))?;
        let noise_temp =
            parse_temperature(temp).map_err(|e| format!("stage file line {line_no}: {e}"))?;
        let stage = ChainStage::new(gain_db, noise_temp)
            .map_err(|e| format!("stage file line {line_no}: {e}"))?;
        stages.push(stage);
    }
    if stages.is_empty() {
        return Err(format!(
            "stage file {} contains no stages",
            path.display()
        ));
    }
    Ok(stages)
}
