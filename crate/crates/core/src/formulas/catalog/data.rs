// Generated from the published tables; do not edit by hand.
use super::{Construction, RawEntry};
// No printed coefficients: the order-6, m=3 root with w_1 near -1.1777,
// polished to 33 digits from the order conditions.
const W_Y6M3A: &[&str] = &[
    "-1.17767998417887100694641568096449",
    "0.235573213359358133684793182978487",
    "0.784513610477557263819497633866487",
];
const W_KL8S15: &[&str] = &[
    "0.315293092396766596632056663811",
    "0.33462491824529818378495797988218",
    "0.2990641813036559238444635406886",
    "-0.57386247111608226665638772663554",
    "0.19075471029623837995387625645037",
    "-0.40910082580003159399730009589356",
    "0.74167036435061295344822780178381",
];
const W_Y8M8: &[&str] = &[
    "0.29137384767986663096528500968049",
    "0.26020394234904150277316667709864",
    "0.18669648149540687549831902999911",
    "-0.40049110428180105319963667975074",
    "0.15982762208609923217390166127256",
    "-0.38400573301491401473462588779099",
    "0.56148845266356446893590729572808",
    "0.12783360986284110837857554950443",
];
const W_Y8M10: &[&str] = &[
    "0.59358060400850625863514059265224",
    "-0.46916012347004197296293264921328",
    "0.2743566425898467907228242878146",
    "0.17193879484656773059919074965377",
    "0.23439874482541384415430578747541",
    "-0.48616424480326193899617759997914",
    "0.49617367388114660354871757044906",
    "-0.32660218948439130114501815323814",
    "0.23271679349369857679445410270557",
    "0.098249557414708533273471906180643",
];
const W_Y8M10B: &[&str] = &[
    "0.10467636532245895252340732579853",
    "-0.57896999331780988041471955125778",
    "0.57503350160061785946141563279891",
    "0.12231011868707029786561397542663",
    "0.27793149999039524816733903301747",
    "-0.37349605088056728482635987352576",
    "0.11575566589480463220616543972403",
    "0.1464645610975800618712569230326",
    "-0.39443578322284085764474498594073",
    "0.44370228726021218923197141183196",
];
const W_YP8M8: &[&str] = &[
    "0.21784176681731006074681969186513",
    "0.1947017706053903224022456342907",
    "0.18372413281145589944261642180363",
    "-0.37307499512657736825709230652023",
    "0.15757644257569146373033662060461",
    "-0.33342207567391682979227850551172",
    "0.51788649682987924281787142226803",
    "0.21456475499897766986381219621761",
];
const W_Y10M15: &[&str] = &[
    "0.14552859955499429739088135596618",
    "-0.48773512068133537309419933740564",
    "0.12762011242429535909727342301656",
    "0.70225450019485751220143080587959",
    "-0.62035679146761710925756521405042",
    "0.39099152412786178133688869373114",
    "0.17860253604355465807791041367045",
    "-0.80455783177921776295588528272593",
    "0.053087216442758242118687385646283",
    "0.86836307910275556258687030904753",
    "-0.85326297197907834671536254437991",
    "-0.11732457198874083224967699358383",
    "0.03827345494186056632406947772047",
    "0.74843529029532498233997793305357",
    "0.30208715621975773712410948025906",
];
const W_Y10M16: &[&str] = &[
    "-0.4945013179955571856347147977644",
    "0.2904317222970121479878414292093",
    "0.34781541068705330937913890281003",
    "-0.98828132118546184603769781410676",
    "0.98855187532756405235733957305613",
    "-0.34622976933123177430694714630668",
    "0.20218952619073117554714280367018",
    "0.13064273069786247787208895471461",
    "-0.26441199183146805554735845490359",
    "0.060999140559210408869096992291531",
    "-0.6855442489606141359108973267028",
    "-0.15843692473786584550599206557006",
    "0.15414691779958299150286452215575",
    "0.66715205827214320371061839297055",
    "0.20411874474696598289603677693511",
    "0.081207318210272593225087711441684",
];
const W_Y10M18: &[&str] = &[
    "0.019042478645106035261914181501875",
    "-0.48337326409346903272186302946692",
    "0.035060961741879192451298102625219",
    "0.20690475331505992081884048319725",
    "0.039554342269800383312212959879587",
    "0.062010837356401048997119918637392",
    "-0.46961231983086041266381539270133",
    "-0.15137223243888068391593992998235",
    "0.13186222745709395576675594763784",
    "0.44628663303136375145122785014895",
    "-0.31721379667717916478350053562451",
    "0.44313588649776693705154231063871",
    "0.16887007584153091511395119434171",
    "-0.22652658662557993653900899346103",
    "0.13053736297137232483181427384048",
    "0.11337301050285651053819309187802",
    "0.056199557660148108798028960238124",
    "0.038918323115794012069868989863952",
];
const W_Y10M17: &[&str] = &[
    "-0.28371232689144296279654621726493",
    "0.046779504778147381605331000278223",
    "0.36845892382797770619657504217539",
    "0.19186204094674514739760408197461",
    "-0.53123134392680669702873064192428",
    "-0.0081253242720827266680816105600661",
    "-0.16389450414378567860032917538393",
    "0.18514766119291405032528647881",
    "0.5383584694754681989174668806505",
    "-0.30583981835573485697292316732177",
    "0.43199935609523301289295473774488",
    "0.1510502301631786853020124612813",
    "-0.35051099204829676098801520498121",
    "0.1032971125844291674511513007661",
    "0.15043936943817152697371946806229",
    "0.12118469498650736511410491586846",
    "0.10437742779547826358296681557444",
];
const W_Y10M18B: &[&str] = &[
    "0.025722554623006480493726308396586",
    "0.024673923089392154535100643510344",
    "-0.40545153312882551694596948883526",
    "0.086870323364257282181073061915168",
    "0.12368899347772019656137276541942",
    "0.34599591069083361101791099618656",
    "0.046765678517740550705548061486811",
    "-0.27103335145245847800657868572535",
    "0.13398594471200943261255065567866",
    "-0.45010365706956744617357917877887",
    "0.33699858113023399397587906362881",
    "0.14286479024077276505929263927029",
    "-0.30679647776174213774450994020067",
    "0.048785861198921384322572380948858",
    "0.035258483631052620304882207189439",
    "-0.22380268023236595677874655821875",
    "0.42346449759412505872094526232433",
    "0.14888705463805455702454629353763",
];
const W_YL8M8: &[&str] = &[
    "0.17292977711543507576156846186751",
    "0.27170302438610082629780995303455",
    "0.21909548236117584671732473611764",
    "-0.37248751509173994928726577188503",
    "0.12371215242829562284552662906028",
    "-0.38248795584080401246916516638535",
    "0.54458116939694551608378519711877",
    "0.21703219494512028923053251824215",
];
const G_YP8M8: &[&str] = &[
    "-0.44324901019570126590495430949294",
    "0.25459857192003772850622377066944",
    "-0.73862036266779261573694538099739",
    "-0.00024139614958652134370419495289618",
    "0.73873460354125365739379753874964",
    "-0.20285971152536085519251666906017",
    "0.44989521689676869571827637424046",
    "0.29538398007876871184026747505657",
    "-0.3364996155865700091428329802017",
];
pub(crate) static ENTRIES: &[RawEntry] = &[
    RawEntry {
        label: "S4m1",
        order: 4,
        stages: 3,
        processed: false,
        construction: Construction::SuzukiFirst(2),
        chi: Some(4.5e-2),
        m_chi: Some(1.38),
        zeta: Some(3.0e-2),
        m_zeta: Some(1.25),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "S4m2",
        order: 4,
        stages: 5,
        processed: false,
        construction: Construction::SuzukiSecond(2),
        chi: Some(2.6e-3),
        m_chi: Some(1.13),
        zeta: Some(4.2e-4),
        m_zeta: Some(0.72),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "O4M5",
        order: 4,
        stages: 5,
        processed: false,
        construction: Construction::Stub,
        chi: Some(2.9e-4),
        m_chi: Some(0.65),
        zeta: Some(1.2e-4),
        m_zeta: Some(0.52),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BM4M6",
        order: 4,
        stages: 6,
        processed: false,
        construction: Construction::Stub,
        chi: Some(1.5e-4),
        m_chi: Some(0.67),
        zeta: Some(3.6e-5),
        m_zeta: Some(0.47),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m6b",
        order: 4,
        stages: 12,
        processed: false,
        construction: Construction::Stub,
        chi: Some(4.5e-5),
        m_chi: Some(0.99),
        zeta: Some(2.8e-5),
        m_zeta: Some(0.87),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "PPBCM4m6",
        order: 4,
        stages: 12,
        processed: true,
        construction: Construction::Stub,
        chi: Some(5.0e-5),
        m_chi: Some(1.01),
        zeta: Some(1.4e-5),
        m_zeta: Some(0.74),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m3",
        order: 4,
        stages: 6,
        processed: true,
        construction: Construction::Stub,
        chi: Some(1.5e-2),
        m_chi: Some(2.09),
        zeta: Some(1.8e-3),
        m_zeta: Some(1.23),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m4",
        order: 4,
        stages: 8,
        processed: true,
        construction: Construction::Stub,
        chi: Some(5.0e-4),
        m_chi: Some(1.19),
        zeta: Some(1.3e-4),
        m_zeta: Some(0.85),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m5",
        order: 4,
        stages: 10,
        processed: true,
        construction: Construction::Stub,
        chi: Some(5.9e-5),
        m_chi: Some(0.88),
        zeta: Some(2.7e-5),
        m_zeta: Some(0.72),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m6",
        order: 4,
        stages: 12,
        processed: true,
        construction: Construction::Stub,
        chi: Some(2.3e-5),
        m_chi: Some(0.83),
        zeta: Some(8.9e-6),
        m_zeta: Some(0.66),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m7",
        order: 4,
        stages: 14,
        processed: true,
        construction: Construction::Stub,
        chi: Some(1.2e-5),
        m_chi: Some(0.82),
        zeta: Some(3.9e-6),
        m_zeta: Some(0.62),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m8",
        order: 4,
        stages: 16,
        processed: true,
        construction: Construction::Stub,
        chi: Some(6.8e-6),
        m_chi: Some(0.82),
        zeta: Some(2.0e-6),
        m_zeta: Some(0.60),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE4m9",
        order: 4,
        stages: 18,
        processed: true,
        construction: Construction::Stub,
        chi: Some(4.5e-6),
        m_chi: Some(0.83),
        zeta: Some(1.1e-6),
        m_zeta: Some(0.58),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "S6m1",
        order: 6,
        stages: 9,
        processed: false,
        construction: Construction::SuzukiFirst(3),
        chi: Some(4.0e-2),
        m_chi: Some(5.26),
        zeta: Some(3.2e-2),
        m_zeta: Some(5.08),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "S6m2",
        order: 6,
        stages: 25,
        processed: false,
        construction: Construction::SuzukiSecond(3),
        chi: Some(1.0e-5),
        m_chi: Some(3.68),
        zeta: Some(2.6e-7),
        m_zeta: Some(1.99),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Y6m3a",
        order: 6,
        stages: 7,
        processed: false,
        construction: Construction::Solved { w: W_Y6M3A },
        chi: Some(1.7e-3),
        m_chi: Some(2.42),
        zeta: Some(1.3e-3),
        m_zeta: Some(2.32),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "KL6s9a",
        order: 6,
        stages: 9,
        processed: false,
        construction: Construction::Stub,
        chi: Some(2.5e-4),
        m_chi: Some(2.26),
        zeta: Some(2.0e-4),
        m_zeta: Some(2.18),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "KL6s9b",
        order: 6,
        stages: 9,
        processed: false,
        construction: Construction::Stub,
        chi: Some(2.5e-4),
        m_chi: Some(2.25),
        zeta: Some(2.0e-4),
        m_zeta: Some(2.18),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "SS6s11",
        order: 6,
        stages: 11,
        processed: false,
        construction: Construction::Stub,
        chi: Some(3.4e-5),
        m_chi: Some(1.98),
        zeta: Some(1.7e-5),
        m_zeta: Some(1.77),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "SS6s13",
        order: 6,
        stages: 13,
        processed: false,
        construction: Construction::Stub,
        chi: Some(1.7e-5),
        m_chi: Some(2.08),
        zeta: Some(4.0e-6),
        m_zeta: Some(1.64),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BM6M10",
        order: 6,
        stages: 10,
        processed: false,
        construction: Construction::Stub,
        chi: Some(5.5e-6),
        m_chi: Some(1.33),
        zeta: Some(2.0e-6),
        m_zeta: Some(1.12),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE6m10b",
        order: 6,
        stages: 20,
        processed: false,
        construction: Construction::Stub,
        chi: Some(5.4e-6),
        m_chi: Some(2.65),
        zeta: Some(7.8e-7),
        m_zeta: Some(1.92),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "PPBCM6m9",
        order: 6,
        stages: 9,
        processed: true,
        construction: Construction::Stub,
        chi: Some(2.0e-6),
        m_chi: Some(2.02),
        zeta: Some(1.2e-7),
        m_zeta: Some(1.26),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "PPBCM6m5",
        order: 6,
        stages: 11,
        processed: true,
        construction: Construction::Stub,
        chi: Some(1.6e-6),
        m_chi: Some(1.19),
        zeta: Some(9.6e-7),
        m_zeta: Some(1.09),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "PPBCM6m6",
        order: 6,
        stages: 13,
        processed: true,
        construction: Construction::Stub,
        chi: Some(4.2e-7),
        m_chi: Some(1.13),
        zeta: Some(2.6e-7),
        m_zeta: Some(1.04),
        omega_d6: Some(1.2e-9),
        omega_d4: Some(1.4e-9),
    },
    RawEntry {
        label: "BCE6m5",
        order: 6,
        stages: 10,
        processed: true,
        construction: Construction::Stub,
        chi: Some(5.1e-3),
        m_chi: Some(4.15),
        zeta: Some(4.0e-3),
        m_zeta: Some(3.98),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE6m6",
        order: 6,
        stages: 12,
        processed: true,
        construction: Construction::Stub,
        chi: Some(6.5e-5),
        m_chi: Some(2.41),
        zeta: Some(2.6e-5),
        m_zeta: Some(2.07),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE6m7",
        order: 6,
        stages: 14,
        processed: true,
        construction: Construction::Stub,
        chi: Some(1.3e-5),
        m_chi: Some(2.14),
        zeta: Some(3.0e-6),
        m_zeta: Some(1.69),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE6m8",
        order: 6,
        stages: 16,
        processed: true,
        construction: Construction::Stub,
        chi: Some(3.6e-6),
        m_chi: Some(1.98),
        zeta: Some(4.3e-7),
        m_zeta: Some(1.39),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE6m9",
        order: 6,
        stages: 18,
        processed: true,
        construction: Construction::Stub,
        chi: Some(5.7e-6),
        m_chi: Some(2.41),
        zeta: Some(1.7e-7),
        m_zeta: Some(1.33),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "BCE6m10",
        order: 6,
        stages: 20,
        processed: true,
        construction: Construction::Stub,
        chi: Some(2.4e-6),
        m_chi: Some(2.32),
        zeta: Some(9.9e-9),
        m_zeta: Some(0.93),
        omega_d6: Some(3.4e-11),
        omega_d4: Some(3.3e-11),
    },
    RawEntry {
        label: "BCE6m11",
        order: 6,
        stages: 22,
        processed: true,
        construction: Construction::Stub,
        chi: Some(6.1e-6),
        m_chi: Some(2.97),
        zeta: Some(1.5e-8),
        m_zeta: Some(1.10),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "S8m1",
        order: 8,
        stages: 27,
        processed: false,
        construction: Construction::SuzukiFirst(4),
        chi: Some(4.8e-2),
        m_chi: Some(18.5),
        zeta: Some(2.3e-2),
        m_zeta: Some(16.9),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "S8m2",
        order: 8,
        stages: 125,
        processed: false,
        construction: Construction::SuzukiSecond(4),
        chi: Some(4.8e-9),
        m_chi: Some(11.4),
        zeta: Some(5.0e-13),
        m_zeta: Some(3.62),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Y8m7d",
        order: 8,
        stages: 15,
        processed: false,
        construction: Construction::Stub,
        chi: Some(9.7e-4),
        m_chi: Some(6.30),
        zeta: Some(1.9e-4),
        m_zeta: Some(5.15),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "KL8s15",
        order: 8,
        stages: 15,
        processed: false,
        construction: Construction::Plain { w: W_KL8S15 },
        chi: Some(5.9e-6),
        m_chi: Some(3.33),
        zeta: Some(2.7e-6),
        m_zeta: Some(3.02),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Y8m8",
        order: 8,
        stages: 17,
        processed: false,
        construction: Construction::Plain { w: W_Y8M8 },
        chi: Some(5.7e-7),
        m_chi: None,
        zeta: None,
        m_zeta: None,
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "KL8s17a",
        order: 8,
        stages: 17,
        processed: false,
        construction: Construction::Stub,
        chi: Some(5.9e-7),
        m_chi: Some(2.83),
        zeta: Some(2.3e-7),
        m_zeta: Some(2.52),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "KL8s17b",
        order: 8,
        stages: 17,
        processed: false,
        construction: Construction::Stub,
        chi: Some(5.8e-7),
        m_chi: Some(2.83),
        zeta: Some(2.1e-7),
        m_zeta: Some(2.49),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "SS8s19",
        order: 8,
        stages: 19,
        processed: false,
        construction: Construction::Stub,
        chi: Some(1.6e-7),
        m_chi: Some(2.68),
        zeta: Some(7.2e-8),
        m_zeta: Some(2.43),
        omega_d6: Some(3.5e-11),
        omega_d4: Some(3.4e-11),
    },
    RawEntry {
        label: "SS8s21",
        order: 8,
        stages: 21,
        processed: false,
        construction: Construction::Stub,
        chi: Some(2.6e-7),
        m_chi: Some(3.16),
        zeta: Some(8.1e-8),
        m_zeta: Some(2.73),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "PP8s13",
        order: 8,
        stages: 13,
        processed: true,
        construction: Construction::Stub,
        chi: Some(1.1e-6),
        m_chi: Some(2.33),
        zeta: Some(8.6e-7),
        m_zeta: Some(2.27),
        omega_d6: Some(4.4e-10),
        omega_d4: Some(4.2e-10),
    },
    RawEntry {
        label: "PP8s19",
        order: 8,
        stages: 19,
        processed: true,
        construction: Construction::Stub,
        chi: None,
        m_chi: None,
        zeta: Some(2.6e-7),
        m_zeta: Some(2.85),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Y8m10",
        order: 8,
        stages: 21,
        processed: false,
        construction: Construction::Plain { w: W_Y8M10 },
        chi: Some(4.9e-8),
        m_chi: Some(2.56),
        zeta: Some(1.1e-8),
        m_zeta: Some(2.13),
        omega_d6: Some(8.5e-12),
        omega_d4: Some(8.7e-12),
    },
    RawEntry {
        label: "Y8m10b",
        order: 8,
        stages: 21,
        processed: false,
        construction: Construction::Plain { w: W_Y8M10B },
        chi: Some(5.4e-7),
        m_chi: Some(3.45),
        zeta: Some(1.6e-9),
        m_zeta: Some(1.67),
        omega_d6: Some(1.3e-12),
        omega_d4: Some(1.5e-12),
    },
    RawEntry {
        label: "YP8m8",
        order: 8,
        stages: 17,
        processed: true,
        construction: Construction::Processed { w: W_YP8M8, gammas: G_YP8M8 },
        chi: Some(5.4e-8),
        m_chi: Some(2.10),
        zeta: Some(2.2e-9),
        m_zeta: Some(1.41),
        omega_d6: Some(1.7e-12),
        omega_d4: Some(2.3e-12),
    },
    RawEntry {
        label: "YL8m8",
        order: 8,
        stages: 17,
        processed: true,
        construction: Construction::Kernel { w: W_YL8M8 },
        chi: None,
        m_chi: None,
        zeta: None,
        m_zeta: None,
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "S10m1",
        order: 10,
        stages: 81,
        processed: false,
        construction: Construction::SuzukiFirst(5),
        chi: Some(7.5e-2),
        m_chi: Some(62.5),
        zeta: Some(8.1e-3),
        m_zeta: Some(50.0),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "S10m2",
        order: 10,
        stages: 625,
        processed: false,
        construction: Construction::SuzukiSecond(5),
        chi: Some(2.6e-13),
        m_chi: Some(34.5),
        zeta: Some(5.9e-19),
        m_zeta: Some(9.39),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "KL10s31a",
        order: 10,
        stages: 31,
        processed: false,
        construction: Construction::Stub,
        chi: Some(6.1e-6),
        m_chi: Some(9.33),
        zeta: Some(5.4e-6),
        m_zeta: Some(9.21),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "KL10s31b",
        order: 10,
        stages: 31,
        processed: false,
        construction: Construction::Stub,
        chi: Some(6.4e-5),
        m_chi: Some(11.88),
        zeta: Some(4.2e-5),
        m_zeta: Some(11.3),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "SS10s31",
        order: 10,
        stages: 31,
        processed: false,
        construction: Construction::Stub,
        chi: Some(3.4e-8),
        m_chi: Some(5.55),
        zeta: Some(2.7e-8),
        m_zeta: Some(5.43),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "SS10s33",
        order: 10,
        stages: 33,
        processed: false,
        construction: Construction::Stub,
        chi: Some(1.0e-8),
        m_chi: Some(5.25),
        zeta: Some(8.1e-9),
        m_zeta: Some(5.12),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "SS10s35",
        order: 10,
        stages: 35,
        processed: false,
        construction: Construction::Stub,
        chi: Some(8.0e-10),
        m_chi: Some(4.31),
        zeta: Some(4.3e-11),
        m_zeta: Some(3.22),
        omega_d6: Some(3.0e-15),
        omega_d4: Some(3.0e-15),
    },
    RawEntry {
        label: "Alberdi31",
        order: 10,
        stages: 31,
        processed: false,
        construction: Construction::Stub,
        chi: Some(1.1e-7),
        m_chi: Some(6.23),
        zeta: Some(1.0e-7),
        m_zeta: Some(6.18),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Alberdi33",
        order: 10,
        stages: 33,
        processed: false,
        construction: Construction::Stub,
        chi: Some(5.9e-8),
        m_chi: Some(6.25),
        zeta: Some(5.2e-8),
        m_zeta: Some(6.17),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Alberdi35",
        order: 10,
        stages: 35,
        processed: false,
        construction: Construction::Stub,
        chi: Some(1.1e-8),
        m_chi: Some(5.62),
        zeta: Some(9.3e-9),
        m_zeta: Some(5.51),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "PP10s19",
        order: 10,
        stages: 19,
        processed: true,
        construction: Construction::Stub,
        chi: None,
        m_chi: None,
        zeta: Some(5.7e-6),
        m_zeta: Some(5.68),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "PP10s23",
        order: 10,
        stages: 23,
        processed: true,
        construction: Construction::Stub,
        chi: Some(2.7e-5),
        m_chi: Some(8.04),
        zeta: Some(3.2e-8),
        m_zeta: Some(4.09),
        omega_d6: Some(2.3e-12),
        omega_d4: Some(1.5e-12),
    },
    RawEntry {
        label: "Y10m15",
        order: 10,
        stages: 31,
        processed: false,
        construction: Construction::Plain { w: W_Y10M15 },
        chi: Some(4.5e-7),
        m_chi: Some(7.19),
        zeta: Some(4.1e-7),
        m_zeta: Some(7.12),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Y10m16",
        order: 10,
        stages: 33,
        processed: false,
        construction: Construction::Plain { w: W_Y10M16 },
        chi: Some(1.9e-8),
        m_chi: Some(5.57),
        zeta: Some(7.5e-9),
        m_zeta: Some(5.08),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Y10m17",
        order: 10,
        stages: 35,
        processed: false,
        construction: Construction::Plain { w: W_Y10M17 },
        chi: Some(1.4e-8),
        m_chi: Some(5.75),
        zeta: Some(1.8e-10),
        m_zeta: Some(3.71),
        omega_d6: Some(2.6e-14),
        omega_d4: Some(2.5e-14),
    },
    RawEntry {
        label: "Y10m18",
        order: 10,
        stages: 37,
        processed: false,
        construction: Construction::Plain { w: W_Y10M18 },
        chi: Some(3.1e-9),
        m_chi: Some(5.22),
        zeta: Some(2.2e-9),
        m_zeta: Some(5.05),
        omega_d6: None,
        omega_d4: None,
    },
    RawEntry {
        label: "Y10m18b",
        order: 10,
        stages: 37,
        processed: false,
        construction: Construction::Plain { w: W_Y10M18B },
        chi: Some(2.6e-8),
        m_chi: Some(6.46),
        zeta: Some(4.2e-10),
        m_zeta: Some(4.27),
        omega_d6: Some(5.1e-14),
        omega_d4: Some(3.8e-14),
    },
];
