//! Built-in de-identification profiles, expressed in the same text format
//! user profiles use. "basic" is the full attribute table; the ten option
//! profiles extend it with retain/clean overrides.

/// The baseline attribute table. Composite choices from the standard's table
/// (e.g. X/Z/D) are collapsed to their strictest alternative.
pub(crate) const BASIC: &str = r#"
name = basic
default_action = K
private_tags = remove-all
date_shift_days = 0

0008,0014 = U
0008,0018 = U
0008,0020 = Z
0008,0021 = X
0008,0022 = X
0008,0023 = Z
0008,0024 = X
0008,0025 = X
0008,002A = X
0008,0030 = Z
0008,0031 = X
0008,0032 = X
0008,0033 = Z
0008,0034 = X
0008,0035 = X
0008,0050 = Z
0008,0080 = X
0008,0081 = X
0008,0082 = X
0008,0090 = Z
0008,0092 = X
0008,0094 = X
0008,0096 = X
0008,1010 = X
0008,1030 = X
0008,103E = X
0008,1040 = X
0008,1048 = X
0008,1049 = X
0008,1050 = X
0008,1052 = X
0008,1060 = X
0008,1062 = X
0008,1070 = X
0008,1072 = X
0008,1080 = X
0008,1084 = X
0008,1110 = X
0008,1111 = X
0008,1120 = X
0008,1140 = X
0008,1155 = U
0008,2111 = X
0008,3010 = U
0010,0010 = Z
0010,0020 = Z
0010,0021 = X
0010,0030 = Z
0010,0032 = X
0010,0040 = Z
0010,0050 = X
0010,0101 = X
0010,0102 = X
0010,1000 = X
0010,1001 = X
0010,1002 = X
0010,1005 = X
0010,1010 = X
0010,1020 = X
0010,1030 = X
0010,1040 = X
0010,1060 = X
0010,1080 = X
0010,1081 = X
0010,1090 = X
0010,2000 = X
0010,2110 = X
0010,2150 = X
0010,2152 = X
0010,2154 = X
0010,2160 = X
0010,2180 = X
0010,21A0 = X
0010,21B0 = X
0010,21C0 = X
0010,21D0 = X
0010,21F0 = X
0010,2203 = X
0010,2297 = X
0010,2299 = X
0010,4000 = X
0018,1000 = X
0018,1002 = U
0018,1004 = X
0018,1005 = X
0018,1007 = X
0018,1008 = X
0018,1030 = X
0018,1400 = X
0018,4000 = X
0018,700A = X
0018,9424 = X
0018,A003 = X
0020,000D = U
0020,000E = U
0020,0010 = Z
0020,0052 = U
0020,0200 = U
0020,3401 = X
0020,3404 = X
0020,3406 = X
0020,4000 = X
0020,9158 = X
0020,9161 = U
0020,9164 = U
0028,1199 = U
0028,1214 = U
0032,0012 = X
0032,1020 = X
0032,1021 = X
0032,1030 = X
0032,1032 = X
0032,1033 = X
0032,1060 = X
0032,1070 = X
0032,4000 = X
0038,0010 = X
0038,0011 = X
0038,001E = X
0038,0020 = X
0038,0021 = X
0038,0040 = X
0038,0050 = X
0038,0060 = X
0038,0061 = X
0038,0062 = X
0038,0300 = X
0038,0400 = X
0038,0500 = X
0038,4000 = X
0040,0001 = X
0040,0002 = X
0040,0003 = X
0040,0004 = X
0040,0005 = X
0040,0006 = X
0040,0007 = X
0040,000B = X
0040,0010 = X
0040,0011 = X
0040,0012 = X
0040,0241 = X
0040,0242 = X
0040,0243 = X
0040,0244 = X
0040,0245 = X
0040,0250 = X
0040,0251 = X
0040,0253 = X
0040,0254 = X
0040,0275 = X
0040,0280 = X
0040,0555 = X
0040,1001 = X
0040,1004 = X
0040,1005 = X
0040,1010 = X
0040,1011 = X
0040,1102 = X
0040,1103 = X
0040,1400 = X
0040,2001 = X
0040,2008 = X
0040,2009 = X
0040,2010 = X
0040,2400 = X
0040,3001 = X
0040,4023 = U
0040,4025 = X
0040,4027 = X
0040,4030 = X
0040,4034 = X
0040,4035 = X
0040,4036 = X
0040,4037 = X
0040,A073 = X
0040,A075 = X
0040,A088 = X
0040,A123 = X
0040,A124 = U
0040,A730 = X
0070,031A = U
0088,0140 = U
0088,0200 = X
0088,0904 = X
0088,0906 = X
0088,0910 = X
0088,0912 = X
0400,0100 = X
0400,0402 = X
0400,0403 = X
0400,0404 = X
0400,0550 = X
0400,0561 = X
2030,0020 = X
3006,0024 = U
3006,00C2 = U
300E,0008 = X
4000,0010 = X
4000,4000 = X
4008,0042 = X
4008,0102 = X
4008,010A = X
4008,010B = X
4008,010C = X
4008,0111 = X
4008,0114 = X
4008,0115 = X
4008,0118 = X
4008,0119 = X
4008,011A = X
4008,0202 = X
4008,0300 = X
4008,4000 = X
50xx,xxxx = X
60xx,3000 = X
60xx,4000 = X
"#;

const RETAIN_UIDS: &str = r#"
name = retain-uids
extends = basic
retain_options = retain-uids

0008,0014 = K
0008,0018 = K
0008,1155 = K
0008,3010 = K
0018,1002 = K
0020,000D = K
0020,000E = K
0020,0052 = K
0020,0200 = K
0020,9161 = K
0020,9164 = K
0028,1199 = K
0028,1214 = K
0040,4023 = K
0040,A124 = K
0070,031A = K
0088,0140 = K
3006,0024 = K
3006,00C2 = K
"#;

const RETAIN_DEVICE_IDENTITY: &str = r#"
name = retain-device-identity
extends = basic
retain_options = retain-device-identity

0008,1010 = K
0018,1000 = K
0018,1002 = K
0018,1004 = K
0018,1005 = K
0018,1007 = K
0018,1008 = K
0018,700A = K
"#;

const RETAIN_PATIENT_CHARACTERISTICS: &str = r#"
name = retain-patient-characteristics
extends = basic
retain_options = retain-patient-characteristics

0010,0040 = K
0010,1010 = K
0010,1020 = K
0010,1030 = K
0010,2160 = K
0010,21A0 = K
0010,21C0 = K
0010,21D0 = C
0010,2203 = K
"#;

const RETAIN_LONGITUDINAL_FULL_DATES: &str = r#"
name = retain-longitudinal-full-dates
extends = basic
retain_options = retain-longitudinal-full-dates

0008,0020 = K
0008,0021 = K
0008,0022 = K
0008,0023 = K
0008,002A = K
0008,0030 = K
0008,0031 = K
0008,0032 = K
0008,0033 = K
0038,0020 = K
0038,0021 = K
0040,0002 = K
0040,0003 = K
0040,0004 = K
0040,0005 = K
0040,0244 = K
0040,0245 = K
0040,0250 = K
0040,0251 = K
"#;

const RETAIN_LONGITUDINAL_MODIFIED_DATES: &str = r#"
name = retain-longitudinal-modified-dates
extends = basic
retain_options = retain-longitudinal-modified-dates
date_shift_days = -30

0008,0020 = C
0008,0021 = C
0008,0022 = C
0008,0023 = C
0008,002A = C
0008,0030 = C
0008,0031 = C
0008,0032 = C
0008,0033 = C
0038,0020 = C
0038,0021 = C
0040,0002 = C
0040,0003 = C
0040,0004 = C
0040,0005 = C
0040,0244 = C
0040,0245 = C
0040,0250 = C
0040,0251 = C
"#;

const CLEAN_DESCRIPTORS: &str = r#"
name = clean-descriptors
extends = basic
retain_options = clean-descriptors

0008,1030 = C
0008,103E = C
0008,2111 = C
0018,1030 = C
0018,4000 = C
0020,4000 = C
0032,1030 = C
0032,4000 = C
0038,4000 = C
0040,0254 = C
4008,0115 = C
4008,0300 = C
4008,4000 = C
"#;

// The four pixel/content cleaning options share the basic metadata table;
// their effect is carried as a retain-option flag the pipeline reads to
// enable the matching pixel-cleaning stage.
const CLEAN_PIXEL_DATA: &str = "
name = clean-pixel-data
extends = basic
retain_options = clean-pixel-data
";

const CLEAN_RECOGNIZABLE_VISUAL_FEATURES: &str = "
name = clean-recognizable-visual-features
extends = basic
retain_options = clean-recognizable-visual-features
";

const CLEAN_GRAPHICS: &str = "
name = clean-graphics
extends = basic
retain_options = clean-graphics
";

const CLEAN_STRUCTURED_CONTENT: &str = "
name = clean-structured-content
extends = basic
retain_options = clean-structured-content
";

pub(crate) static BUILTINS: &[(&str, &str)] = &[
    ("basic", BASIC),
    ("clean-pixel-data", CLEAN_PIXEL_DATA),
    (
        "clean-recognizable-visual-features",
        CLEAN_RECOGNIZABLE_VISUAL_FEATURES,
    ),
    ("clean-graphics", CLEAN_GRAPHICS),
    ("clean-structured-content", CLEAN_STRUCTURED_CONTENT),
    ("clean-descriptors", CLEAN_DESCRIPTORS),
    (
        "retain-longitudinal-full-dates",
        RETAIN_LONGITUDINAL_FULL_DATES,
    ),
    (
        "retain-longitudinal-modified-dates",
        RETAIN_LONGITUDINAL_MODIFIED_DATES,
    ),
    ("retain-patient-characteristics", RETAIN_PATIENT_CHARACTERISTICS),
    ("retain-device-identity", RETAIN_DEVICE_IDENTITY),
    ("retain-uids", RETAIN_UIDS),
];

/// Names of the shipped profiles: the basic profile plus the ten option
/// profiles derived from it.
pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|(name, _)| *name)
}
