#include "pbir/gf_fixture.hpp"

namespace pbir::gf {

std::vector<Document> documents() {
    return {
        make_document("d1", "Shipment of gold damaged in a fire"),
        make_document("d2", "Delivery of silver arrived in a silver truck"),
        make_document("d3", "Shipment of gold arrived in a truck"),
    };
}

const IndexTable& index_table() {
    static const IndexTable table{
        .lexicon = {"a", "arrived", "damaged", "delivery", "fire", "gold", "in", "of", "shipment",
                    "silver", "truck"},
        .tf = {{
            {1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 0},
            {1, 1, 0, 1, 0, 0, 1, 1, 0, 2, 1},
            {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 1},
        }},
        .tf_q = {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
        .doc_freq = {3, 2, 1, 1, 1, 2, 3, 3, 2, 1, 2},
        .idf = {0, 0.176, 0.477, 0.477, 0.477, 0.176, 0, 0, 0.176, 0.477, 0.176},
    };
    return table;
}

std::span<const WeightTable> weight_tables() {
    static const std::array<WeightTable, 4> tables{{
        {WeightScheme::wf1,
         {{
             {0.378, 0, 0.378, 0, 0.378, 0.378, 0.378, 0.378, 0.378, 0, 0},
             {0.316, 0.316, 0, 0.316, 0, 0, 0.316, 0.316, 0, 0.632, 0.316},
             {0.378, 0.378, 0, 0, 0, 0.378, 0.378, 0.378, 0.378, 0, 0.378},
         }},
         {0, 0, 0, 0, 0, 0.577, 0, 0, 0, 0.577, 0.577}},
        {WeightScheme::wf2,
         {{
             {0, 0, 0.663, 0, 0.663, 0.245, 0, 0, 0.245, 0, 0},
             {0, 0.161, 0, 0.435, 0, 0, 0, 0, 0, 0.871, 0.161},
             {0, 0.500, 0, 0, 0, 0.500, 0, 0, 0.500, 0, 0.500},
         }},
         {0, 0, 0, 0, 0, 0.327, 0, 0, 0, 0.823, 0.327}},
        {WeightScheme::wf3,
         {{
             {0, 0, 0.663, 0, 0.663, 0.245, 0, 0, 0.245, 0, 0},
             {0, 0.190, 0, 0.514, 0, 0, 0, 0, 0, 0.815, 0.190},
             {0, 0.500, 0, 0, 0, 0.500, 0, 0, 0.500, 0, 0.500},
         }},
         {0, 0, 0, 0, 0, 0.577, 0, 0, 0, 0.577, 0.577}},
        {WeightScheme::wf4,
         {{
             {0, 0, 0.663, 0, 0.663, 0.245, 0, 0, 0.245, 0, 0},
             {0, 0.161, 0, 0.435, 0, 0, 0, 0, 0, 0.871, 0.161},
             {0, 0.500, 0, 0, 0, 0.500, 0, 0, 0.500, 0, 0.500},
         }},
         {0, 0.128, 0.346, 0.346, 0.346, 0.255, 0, 0, 0.128, 0.692, 0.255}},
    }};
    return tables;
}

namespace {

ReferenceRow row(ModelId model, std::optional<double> c, std::vector<double> values) {
    return {model, to_string(model), c, std::move(values)};
}

ReferenceRow external(std::vector<double> values) {
    return {std::nullopt, kExternalLabel, std::nullopt, std::move(values)};
}

std::vector<ReferenceTable> build_reference_tables() {
    using enum ModelId;
    constexpr double strict = 0.001;
    constexpr double loose = 0.005;
    const std::vector<double> svdm_rdq = {-0.0552, 0.9912, 0.4480};
    const std::vector<double> svdm_rdd = {-0.1892, 0.8678, 0.3228};

    std::vector<ReferenceTable> t;
    t.push_back({"rdq-apdqk1-wf1", ScoreKind::rdq, ApdqkScheme::apdqk1, WeightScheme::wf1, strict,
                 {row(tvs_inm, 169, {0.1277, 0.5477, 0.2555}),
                  row(tvs_pc, 21.1, {0.1118, 0.5477, 0.2235}),
                  row(cfs_inm, 751, {0.1001, 0.5477, 0.2002}),
                  row(cfs_pc, 10.6, {0.0876, 0.5477, 0.1751}),
                  row(vsm, std::nullopt, {0.2182, 0.5477, 0.4364}),
                  external(svdm_rdq)}});
    t.push_back({"rdd-apdqk1-wf1", ScoreKind::rdd, ApdqkScheme::apdqk1, WeightScheme::wf1, loose,
                 {row(tvs_inm, 519, {0.2647, 0.7143, 0.4375}),
                  row(cfs_inm, 7698, {0.2072, 0.7143, 0.3901}),
                  row(vsm, std::nullopt, {0.3585, 0.7143, 0.5976}),
                  external(svdm_rdd)}});
    t.push_back({"rdq-apdqk1-wf2", ScoreKind::rdq, ApdqkScheme::apdqk1, WeightScheme::wf2, loose,
                 {row(tvs_inm, 66.19, {0.0067, 0.8249, 0.0562}),
                  row(tvs_pc, 12.63, {0.0059, 0.8249, 0.0492}),
                  row(cfs_inm, 234.0, {0.0006213, 0.8249, 0.0209}),
                  row(cfs_pc, 30.00, {0.0005436, 0.8249, 0.0074}),
                  row(vsm, std::nullopt, {0.0801, 0.8249, 0.3272}),
                  external(svdm_rdq)}});
    t.push_back({"rdd-apdqk1-wf2", ScoreKind::rdd, ApdqkScheme::apdqk1, WeightScheme::wf2, loose,
                 {row(tvs_inm, 534, {0.0, 0.2448, 0.0923}),
                  row(cfs_inm, 9986, {0.0, 0.2448, 0.0596}),
                  row(vsm, std::nullopt, {0.0, 0.2448, 0.1607}),
                  external(svdm_rdd)}});
    t.push_back({"rdq-apdqk1-wf3", ScoreKind::rdq, ApdqkScheme::apdqk1, WeightScheme::wf3, loose,
                 {row(tvs_inm, 121.4, {0.0385, 0.5799, 0.3212}),
                  row(tvs_pc, 15.17, {0.0337, 0.5799, 0.2810}),
                  row(cfs_inm, 408.8, {0.0170, 0.5799, 0.2028}),
                  row(cfs_pc, 30.00, {0.0149, 0.5799, 0.1774}),
                  row(vsm, std::nullopt, {0.1413, 0.5799, 0.5773}),
                  external(svdm_rdq)}});
    t.push_back({"rdd-apdqk1-wf3", ScoreKind::rdd, ApdqkScheme::apdqk1, WeightScheme::wf3, loose,
                 {row(tvs_inm, 534, {0.0, 0.2448, 0.1286}),
                  row(cfs_inm, 9986, {0.0, 0.2448, 0.1040}),
                  row(vsm, std::nullopt, {0.0, 0.2448, 0.1897}),
                  external(svdm_rdd)}});
    t.push_back({"rdq-apdqk1-wf4", ScoreKind::rdq, ApdqkScheme::apdqk1, WeightScheme::wf4, loose,
                 {row(tvs_inm, 101.1, {0.2610, 0.8146, 0.0653}),
                  row(tvs_pc, 12.63, {0.2284, 0.8146, 0.0571}),
                  row(cfs_inm, 234.0, {0.1035, 0.8146, 0.0209}),
                  row(cfs_pc, 30.00, {0.0905, 0.8146, 0.0183}),
                  row(vsm, std::nullopt, {0.5525, 0.8146, 0.3829})}});
    t.push_back({"rdd-apdqk1-wf4", ScoreKind::rdd, ApdqkScheme::apdqk1, WeightScheme::wf4, loose,
                 {row(tvs_inm, 534, {0.0, 0.2448, 0.0923}),
                  row(cfs_inm, 9986, {0.0, 0.2448, 0.0583}),
                  row(vsm, std::nullopt, {0.0, 0.2448, 0.1607})}});
    t.push_back({"rdq-apdqk2-wf2", ScoreKind::rdq, ApdqkScheme::apdqk2, WeightScheme::wf2, loose,
                 {row(tvs_inm, 0.005001, {0.008835, 0.8248, 0.07368}),
                  row(cfs_inm, 1.1813, {0.0008155, 0.8248, 0.009736}),
                  row(vsm, std::nullopt, {0.0801, 0.8248, 0.3272})}});
    t.push_back({"rdd-apdqk2-wf2", ScoreKind::rdd, ApdqkScheme::apdqk2, WeightScheme::wf2, loose,
                 {row(tvs_inm, 1.8338, {0.0, 0.2448, 0.1055}),
                  row(cfs_inm, 34.285, {0.0, 0.2448, 0.1055}),
                  row(vsm, std::nullopt, {0.0, 0.2448, 0.1607})}});
    return t;
}

}  // namespace

std::span<const ReferenceTable> reference_tables() {
    static const std::vector<ReferenceTable> tables = build_reference_tables();
    return tables;
}

std::span<const LabeledRow> quoted_scores() {
    static const std::vector<LabeledRow> rows = {
        {"VMS", {0.031, 0.486, 0.062}},
        {"Poisson, no tf", {-0.477, 1.653, 0.699}},
        {"Poisson, with tf", {-0.484, 2.269, 0.708}},
        {"Language model", {0.000409, 0.00121, 0.000743}},
        {"Dirichlet priors", {0.0000114, 0.0002590, 0.0001728}},
        {"Jelinek-Mercer", {0.000314, 0.000443, 0.000381}},
        {"Absolute discount", {0.001215, 0.021716, 0.005727}},
        {"INM", {0.237, 0.473, 0.511}},
        {"LSI", {-0.0541, 0.9910, 0.9543}},
    };
    return rows;
}

std::span<const LabeledRow> quoted_scores_adjusted() {
    static const std::vector<LabeledRow> rows = {
        {"VMS", {0.0526, 0.8249, 0.1052}},
        {"Poisson, no tf", {-0.2380, 0.8249, 0.3488}},
        {"Poisson, with tf", {-0.1760, 0.8249, 0.2574}},
        {"Language model", {0.2788, 0.8249, 0.5065}},
        {"Dirichlet priors", {0.0363, 0.8249, 0.5504}},
        {"Jelinek-Mercer", {0.5847, 0.8249, 0.7095}},
        {"Absolute discount", {0.0461, 0.8249, 0.2175}},
        {"INM", {0.4133, 0.8249, 0.8912}},
        {"LSI", {-0.0450, 0.8249, 0.7944}},
    };
    return rows;
}

std::array<std::size_t, kDocs> expected_rdq_order(WeightScheme scheme) {
    if (scheme == WeightScheme::wf4) return {1, 0, 2};
    return {1, 2, 0};
}

}  // namespace pbir::gf
