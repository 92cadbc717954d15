//! Built-in reference tables: the published benchmark values this toolkit
//! reproduces. Stored as decimal strings at their printed precision and used
//! by the golden-check mode of the CLI and by the acceptance suite.
//!
//! Table 1 — even-sector convergence at r0 = 1, λ = 0.05 (rows over N).
//! Table 2 — odd-sector convergence, same parameters.
//! Table 3 — lowest five merged levels on the (r0, λ) grid.
//! Table 4 — shrinking-box check `r0² E` against Bessel-zero levels.
//! Table 5 — ground state for growing boxes (Gaussian basis) with asymptote.
//! Table 6 — perturbation coefficients E⁰, E² at r0 = 1 (~30 digits).
//! Table 7 — E⁰, E² grids over r0 for nine levels.

/// Convergence row: basis order N and the four lowest sector eigenvalues.
pub struct ConvergenceRow {
    pub n: u32,
    pub values: [&'static str; 4],
}

pub const TABLE_1_EVEN: &[ConvergenceRow] = &[
    ConvergenceRow { n: 2, values: ["3.000033048", "7.586264543", "14.23335748", "16.45868556"] },
    ConvergenceRow { n: 3, values: ["2.999983516", "7.508025752", "13.45385988", "15.41429625"] },
    ConvergenceRow { n: 4, values: ["2.999940526", "7.507311498", "13.39694464", "15.40025129"] },
    ConvergenceRow { n: 5, values: ["2.999940524", "7.507179152", "13.39164826", "15.39159676"] },
    ConvergenceRow { n: 6, values: ["2.999940512", "7.507178210", "13.39154151", "15.39154827"] },
    ConvergenceRow { n: 7, values: ["2.999940512", "7.507178149", "13.39153360", "15.39153048"] },
    ConvergenceRow { n: 8, values: ["2.999940512", "7.507178149", "13.39153353", "15.39153043"] },
    ConvergenceRow { n: 9, values: ["2.999940512", "7.507178149", "13.39153353", "15.39153042"] },
    ConvergenceRow { n: 10, values: ["2.999940512", "7.507178149", "13.39153353", "15.39153042"] },
];

pub const TABLE_2_ODD: &[ConvergenceRow] = &[
    ConvergenceRow { n: 3, values: ["7.507984721", "13.45385988", "22.77274842", "25.97120953"] },
    ConvergenceRow { n: 4, values: ["7.507270472", "13.39694464", "20.61132495", "24.8074732"] },
    ConvergenceRow { n: 5, values: ["7.507138138", "13.39164826", "20.59740341", "24.78828653"] },
    ConvergenceRow { n: 6, values: ["7.507137196", "13.39154151", "20.58517127", "24.77616193"] },
    ConvergenceRow { n: 7, values: ["7.507137135", "13.3915336", "20.58516517", "24.77603555"] },
    ConvergenceRow { n: 8, values: ["7.507137134", "13.39153353", "20.58514439", "24.77599977"] },
    ConvergenceRow { n: 9, values: ["7.507137134", "13.39153353", "20.58514439", "24.77599951"] },
    ConvergenceRow { n: 10, values: ["7.507137134", "13.39153353", "20.58514438", "24.77599947"] },
    ConvergenceRow { n: 11, values: ["7.507137134", "13.39153353", "20.58514438", "24.77599947"] },
];

/// One merged-spectrum row: λ and the five lowest levels.
pub struct SpectrumRow {
    pub lambda: &'static str,
    pub values: [&'static str; 5],
}

pub struct SpectrumBlock {
    pub r0: &'static str,
    pub rows: &'static [SpectrumRow],
}

pub const TABLE_3: &[SpectrumBlock] = &[
    SpectrumBlock {
        r0: "1",
        rows: &[
            SpectrumRow { lambda: "0.05", values: ["2.999940513", "7.507137135", "7.507178149", "13.39153353", "13.39153353"] },
            SpectrumRow { lambda: "0.50", values: ["2.994054784", "7.503668344", "7.507765819", "13.39108541", "13.39108591"] },
            SpectrumRow { lambda: "1.00", values: ["2.976261687", "7.493165697", "7.509507984", "13.38971472", "13.38972271"] },
            SpectrumRow { lambda: "1.50", values: ["2.946746472", "7.475690676", "7.512284352", "13.38738763", "13.38742819"] },
            SpectrumRow { lambda: "2.00", values: ["2.905712640", "7.451286862", "7.515910615", "13.38404044", "13.38416912"] },
            SpectrumRow { lambda: "2.50", values: ["2.853432944", "7.420014281", "7.520141153", "13.37958431", "13.37989994"] },
            SpectrumRow { lambda: "3.00", values: ["2.790238712", "7.381948462", "7.524679955", "13.37390580", "13.37456372"] },
            SpectrumRow { lambda: "3.50", values: ["2.716507923", "7.337179290", "7.529192808", "13.36686757", "13.36809331"] },
            SpectrumRow { lambda: "4.00", values: ["2.632652970", "7.285809695", "7.533319836", "13.35830959", "13.36041264"] },
            SpectrumRow { lambda: "4.50", values: ["2.539108909", "7.227954221", "7.536687533", "13.34805070", "13.35143815"] },
            SpectrumRow { lambda: "5.00", values: ["2.436322782", "7.163737522", "7.538919695", "13.33589085", "13.34108027"] },
            SpectrumRow { lambda: "5.50", values: ["2.324744395", "7.093292825", "7.539646842", "13.32161397", "13.32924491"] },
            SpectrumRow { lambda: "6.00", values: ["2.204818732", "7.016760401", "7.538513927", "13.30499156", "13.31583500"] },
        ],
    },
    SpectrumBlock {
        r0: "2",
        rows: &[
            SpectrumRow { lambda: "0.05", values: ["1.121533076", "2.471308473", "2.471677189", "4.092484156", "4.092484253"] },
            SpectrumRow { lambda: "0.50", values: ["1.055749927", "2.425491724", "2.461288707", "4.079919270", "4.080859951"] },
            SpectrumRow { lambda: "1.00", values: ["0.8676905872", "2.290990158", "2.423192111", "4.029818289", "4.043205109"] },
            SpectrumRow { lambda: "1.50", values: ["0.5825348562", "2.079035409", "2.345604043", "3.921386314", "3.974310688"] },
            SpectrumRow { lambda: "2.00", values: ["0.2240418306", "1.802394297", "2.221750826", "3.750830242", "3.869531452"] },
            SpectrumRow { lambda: "2.50", values: ["-0.1898793720", "1.472757021", "2.051207036", "3.528077680", "3.726784048"] },
            SpectrumRow { lambda: "3.00", values: ["-0.6466661902", "1.099674893", "1.836953799", "3.263614113", "3.546435112"] },
            SpectrumRow { lambda: "3.50", values: ["-1.137519525", "0.6906132774", "1.583000466", "2.965401619", "3.330401976"] },
            SpectrumRow { lambda: "4.00", values: ["-1.656139155", "0.2513481407", "1.293278752", "2.639409865", "3.081315858"] },
            SpectrumRow { lambda: "4.50", values: ["-2.197888537", "-0.2136268090", "0.9712902180", "2.290243036", "2.801986817"] },
            SpectrumRow { lambda: "5.00", values: ["-2.759263211", "-0.7007731576", "0.6200711870", "1.921520387", "2.495126178"] },
            SpectrumRow { lambda: "5.50", values: ["-3.337549806", "-1.207265044", "0.2422612717", "1.536106044", "2.163228074"] },
            SpectrumRow { lambda: "6.00", values: ["-3.930602471", "-1.730813281", "-0.1598114054", "1.136262144", "1.808534720"] },
        ],
    },
    SpectrumBlock {
        r0: "3",
        rows: &[
            SpectrumRow { lambda: "0.05", values: ["1.000719415", "2.013820524", "2.013958910", "3.057224946", "3.057227051"] },
            SpectrumRow { lambda: "0.50", values: ["0.8810998253", "1.901568472", "1.916966478", "2.965602260", "2.977378029"] },
            SpectrumRow { lambda: "1.00", values: ["0.5302449413", "1.575816276", "1.649888731", "2.680883025", "2.751206873"] },
            SpectrumRow { lambda: "1.50", values: ["-0.01534172516", "1.074370141", "1.261029544", "2.240275829", "2.407990915"] },
            SpectrumRow { lambda: "2.00", values: ["-0.7078968358", "0.4396646394", "0.7809055363", "1.681527101", "1.968686336"] },
            SpectrumRow { lambda: "2.50", values: ["-1.505217743", "-0.2930063285", "0.2246424266", "1.035590763", "1.446909507"] },
            SpectrumRow { lambda: "3.00", values: ["-2.377395710", "-1.098385329", "-0.3990488847", "0.3264125547", "0.8529729025"] },
            SpectrumRow { lambda: "3.50", values: ["-3.304713209", "-1.959183144", "-1.084579031", "-0.4273630821", "0.1956863049"] },
            SpectrumRow { lambda: "4.00", values: ["-4.274142731", "-2.863493879", "-1.828291585", "-1.211048117", "-0.5170228781"] },
            SpectrumRow { lambda: "4.50", values: ["-5.276820708", "-3.802913311", "-2.626732853", "-2.014028483", "-1.277913746"] },
            SpectrumRow { lambda: "5.00", values: ["-6.306499209", "-4.771332759", "-3.474706132", "-2.830565891", "-2.080445685"] },
            SpectrumRow { lambda: "5.50", values: ["-7.358622358", "-5.764184603", "-4.365053586", "-3.659193962", "-2.918861635"] },
            SpectrumRow { lambda: "6.00", values: ["-8.429766567", "-6.777965138", "-5.290258763", "-4.500526982", "-3.788232221"] },
        ],
    },
];

/// Shrinking-box comparison at r0 = 0.01: `r0² E` next to the
/// particle-in-a-box level from a Bessel zero.
pub struct SmallBoxRowRef {
    pub scaled: &'static str,
    pub pib: &'static str,
}

pub const TABLE_4: &[SmallBoxRowRef] = &[
    SmallBoxRowRef { scaled: "2.891592982", pib: "2.891592981" },
    SmallBoxRowRef { scaled: "7.340985322", pib: "7.340985321" },
    SmallBoxRowRef { scaled: "13.18730821", pib: "13.18730821" },
    SmallBoxRowRef { scaled: "15.23563117", pib: "15.23563117" },
];

pub const TABLE_4_R0: &str = "0.01";

/// Ground state for growing boxes; columns are λ = 1..5.
pub struct LargeBoxRowRef {
    pub r0: &'static str,
    pub values: [&'static str; 5],
}

pub const TABLE_5: &[LargeBoxRowRef] = &[
    LargeBoxRowRef { r0: "1", values: ["2.9762616872", "2.9057126397", "2.7902387123", "2.6326529698", "2.4363227822"] },
    LargeBoxRowRef { r0: "2", values: ["0.8676905872", "0.2240418306", "-0.6466661902", "-1.6561391549", "-2.7592632114"] },
    LargeBoxRowRef { r0: "3", values: ["0.5302449413", "-0.7078968358", "-2.3773957102", "-4.2741427314", "-6.3064992087"] },
    LargeBoxRowRef { r0: "4", values: ["0.5003869888", "-0.9754437781", "-3.2281562207", "-5.9149227688", "-8.8273550313"] },
    LargeBoxRowRef { r0: "5", values: ["0.5000005484", "-0.9996955349", "-3.4775005103", "-6.7378369178", "-10.4347543324"] },
    LargeBoxRowRef { r0: "6", values: ["0.5000000001", "-0.9999995776", "-3.4997274446", "-6.97857932", "-11.24353629"] },
];

pub const TABLE_5_LAMBDAS: [&str; 5] = ["1", "2", "3", "4", "5"];

/// Asymptote row of Table 5: `1 - λ²/2` at λ = 1..5.
pub const TABLE_5_ASYMPTOTE: [&str; 5] = ["0.5", "-1", "-3.5", "-7", "-11.5"];

/// Perturbation coefficients at r0 = 1 for the five lowest levels.
/// Quantum numbers are `(n, ν, parity)`.
pub struct PtRowRef {
    pub n: u32,
    pub nu: u32,
    pub odd: bool,
    pub e0: &'static str,
    pub e2: &'static str,
}

pub const TABLE_6: &[PtRowRef] = &[
    PtRowRef { n: 0, nu: 0, odd: false, e0: "3.00000000000000000000000000000", e2: "-0.0237951331606905590236056369694" },
    PtRowRef { n: 0, nu: 1, odd: true, e0: "7.50717218045194296125597056932", e2: "-0.0140183043464296058590713039161" },
    PtRowRef { n: 0, nu: 1, odd: false, e0: "7.50717218045194296125597056932", e2: "0.00238755957790725763825593365598" },
    PtRowRef { n: 0, nu: 2, odd: false, e0: "13.3915380494648018553204940093", e2: "-0.00180627777546582495721462311771" },
    PtRowRef { n: 0, nu: 2, odd: true, e0: "13.3915380494648018553204940093", e2: "-0.00180627777546582495721462311771" },
];

/// Three-term truncation of the ground-state sum over states at r0 = 1.
pub const EQ16_TERMS: [&str; 3] = ["-0.023766061092", "-0.0000279159", "-1.0265e-6"];
pub const EQ16_SUM: &str = "-0.0237950030";

/// E⁰/E² grids over r0 = 1..5. Columns are labelled by `(n, ν)`.
pub struct PtGridRef {
    pub columns: &'static [(u32, u32)],
    pub odd: bool,
    /// `rows[k]` belongs to r0 = k + 1.
    pub e0_rows: &'static [&'static [&'static str]],
    pub e2_rows: &'static [&'static [&'static str]],
}

pub const TABLE_7_EVEN: PtGridRef = PtGridRef {
    columns: &[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)],
    odd: false,
    e0_rows: &[
        &["3.00000000", "15.39153805", "37.60583487", "7.50717218", "24.77601000", "13.39153805"],
        &["1.12220853", "4.44050521", "10.01698219", "2.47177521", "6.82577445", "4.09259935"],
        &["1.00193679", "3.08886540", "5.68860128", "2.01496711", "4.27163834", "3.05805047"],
        &["1.00000336", "3.00063504", "5.02056599", "2.00004978", "4.00395689", "3.00036610"],
        &["1.00000000", "3.00000035", "5.00003719", "2.00000002", "4.00000378", "3.00000019"],
    ],
    e2_rows: &[
        &["-0.02379513", "-0.00304969", "-0.00116231", "0.00238756", "0.00085352", "-0.00180628"],
        &["-0.27022732", "-0.04303208", "-0.01639429", "-0.03917956", "0.01445894", "-0.04603071"],
        &["-0.48698448", "-0.27520028", "-0.06592876", "-0.40340299", "-0.03096954", "-0.32944152"],
        &["-0.49995340", "-0.49391191", "-0.39406165", "-0.49914014", "-0.45745249", "-0.49638216"],
        &["-0.49999998", "-0.49999345", "-0.49945600", "-0.49999951", "-0.49990653", "-0.49999640"],
    ],
};

pub const TABLE_7_ODD: PtGridRef = PtGridRef {
    columns: &[(0, 1), (1, 1), (0, 2)],
    odd: true,
    e0_rows: &[
        &["7.50717218", "24.77601000", "13.39153805"],
        &["2.47177521", "6.82577445", "4.09259935"],
        &["2.01496711", "4.27163834", "3.05805047"],
        &["2.00004978", "4.00395689", "3.00036610"],
        &["2.00000002", "4.00000378", "3.00000019"],
    ],
    e2_rows: &[
        &["-0.01401830", "-0.00420907", "-0.00180628"],
        &["-0.18671149", "-0.06215340", "-0.04603071"],
        &["-0.45868737", "-0.25480400", "-0.32944152"],
        &["-0.49968212", "-0.48373136", "-0.49638216"],
        &["-0.49999983", "-0.49996665", "-0.49999640"],
    ],
};

/// Parameters shared by tables 1, 2 and the r0 = 1 block of Table 3.
pub const CONVERGENCE_R0: &str = "1";
pub const CONVERGENCE_LAMBDA: &str = "0.05";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_decimal_rational;

    #[test]
    fn every_cell_parses() {
        let mut cells: Vec<&str> = Vec::new();
        for r in TABLE_1_EVEN.iter().chain(TABLE_2_ODD) {
            cells.extend(r.values);
        }
        for b in TABLE_3 {
            for r in b.rows {
                cells.push(r.lambda);
                cells.extend(r.values);
            }
        }
        for r in TABLE_4 {
            cells.push(r.scaled);
            cells.push(r.pib);
        }
        for r in TABLE_5 {
            cells.extend(r.values);
        }
        cells.extend(TABLE_5_ASYMPTOTE);
        for r in TABLE_6 {
            cells.push(r.e0);
            cells.push(r.e2);
        }
        cells.extend(EQ16_TERMS);
        cells.push(EQ16_SUM);
        for g in [&TABLE_7_EVEN, &TABLE_7_ODD] {
            for row in g.e0_rows.iter().chain(g.e2_rows) {
                cells.extend(row.iter());
            }
        }
        assert!(cells.len() > 300);
        for c in cells {
            parse_decimal_rational(c).unwrap_or_else(|_| panic!("bad cell {c:?}"));
        }
    }

    #[test]
    fn grids_are_rectangular() {
        for b in TABLE_3 {
            assert_eq!(b.rows.len(), 13);
        }
        assert_eq!(TABLE_7_EVEN.e0_rows.len(), 5);
        assert_eq!(TABLE_7_ODD.e2_rows.len(), 5);
        for r in TABLE_7_EVEN.e0_rows {
            assert_eq!(r.len(), TABLE_7_EVEN.columns.len());
        }
        for r in TABLE_7_ODD.e2_rows {
            assert_eq!(r.len(), TABLE_7_ODD.columns.len());
        }
    }
}
