package modular;

/** Precomputed CRC-like lookup table, one entry per line. */
public class HugeTable {
    private static final int[] TABLE = {
        0,
        427799,
        855598,
        283394,
        711193,
        138989,
        566788,
        994587,
        422383,
        850182,
        277978,
        705777,
        133573,
        561372,
        989171,
        416967,
        844766,
        272562,
        700361,
        128157,
        555956,
        983755,
        411551,
        839350,
        267146,
        694945,
        122741,
        550540,
        978339,
        406135,
        833934,
        261730,
        689529,
        117325,
        545124,
        972923,
        400719,
        828518,
        256314,
        684113,
        111909,
        539708,
        967507,
        395303,
        823102,
        250898,
        678697,
        106493,
        534292,
        962091,
        389887,
        817686,
        245482,
        673281,
        101077,
        528876,
        956675,
        384471,
        812270,
        240066,
        667865,
        95661,
        523460,
        951259,
        379055,
        806854,
        234650,
        662449,
        90245,
        518044,
        945843,
        373639,
        801438,
        229234,
        657033,
        84829,
        512628,
        940427,
        368223,
        796022,
        223818,
        651617,
        79413,
        507212,
        935011,
        362807,
        790606,
        218402,
        646201,
        73997,
        501796,
        929595,
        357391,
        785190,
        212986,
        640785,
        68581,
        496380,
        924179,
        351975,
        779774,
        207570,
        635369,
        63165,
        490964,
        918763,
        346559,
        774358,
        202154,
        629953,
        57749,
        485548,
        913347,
        341143,
        768942,
        196738,
        624537,
        52333,
        480132,
        907931,
        335727,
        763526,
        191322,
        619121,
        46917,
        474716,
        902515,
        330311,
        758110,
        185906,
        613705,
        41501,
        469300,
        897099,
        324895,
        752694,
        180490,
        608289,
        36085,
        463884,
        891683,
        319479,
        747278,
        175074,
        602873,
        30669,
        458468,
        886267,
        314063,
        741862,
        169658,
        597457,
        25253,
        453052,
        880851,
        308647,
        736446,
        164242,
        592041,
        19837,
        447636,
        875435,
        303231,
        731030,
        158826,
        586625,
        14421,
        442220,
        870019,
        297815,
        725614,
        153410,
        581209,
        9005,
        436804,
        864603,
        292399,
        720198,
        147994,
        575793,
        3589,
        431388,
        859187,
        286983,
        714782,
        142578,
        570377,
        998176,
        425972,
        853771,
        281567,
        709366,
        137162,
        564961,
        992760,
        420556,
        848355,
        276151,
        703950,
        131746,
        559545,
        987344,
        415140,
        842939,
        270735,
        698534,
        126330,
        554129,
        981928,
        409724,
        837523,
        265319,
        693118,
        120914,
        548713,
        976512,
        404308,
        832107,
        259903,
        687702,
        115498,
        543297,
        971096,
        398892,
        826691,
        254487,
        682286,
        110082,
        537881,
        965680,
        393476,
        821275,
        249071,
        676870,
        104666,
        532465,
        960264,
        388060,
        815859,
        243655,
        671454,
        99250,
        527049,
        954848,
        382644,
        810443,
        238239,
        666038,
        93834,
        521633,
        949432,
        377228,
        805027,
        232823,
        660622,
        88418,
        516217,
        944016,
        371812,
        799611,
        227407,
        655206,
        83002,
        510801,
        938600,
        366396,
        794195,
        221991,
        649790,
        77586,
        505385,
        933184,
        360980,
        788779,
        216575,
        644374,
        72170,
        499969,
        927768,
        355564,
        783363,
        211159,
        638958,
        66754,
        494553,
        922352,
        350148,
        777947,
        205743,
        633542,
        61338,
        489137,
        916936,
        344732,
        772531,
        200327,
        628126,
        55922,
        483721,
        911520,
        339316,
        767115,
        194911,
        622710,
        50506,
        478305,
        906104,
        333900,
        761699,
        189495,
        617294,
        45090,
        472889,
        900688,
        328484,
        756283,
        184079,
        611878,
        39674,
        467473,
        895272,
        323068,
        750867,
        178663,
        606462,
        34258,
        462057,
        889856,
        317652,
        745451,
        173247,
        601046,
        28842,
        456641,
        884440,
        312236,
        740035,
        167831,
        595630,
        23426,
        451225,
        879024,
        306820,
        734619,
        162415,
        590214,
        18010,
        445809,
        873608,
        301404,
        729203,
        156999,
        584798,
        12594,
        440393,
        868192,
        295988,
        723787,
        151583,
        579382,
        7178,
        434977,
        862776,
        290572,
        718371,
        146167,
        573966,
        1762,
        429561,
        857360,
        285156,
        712955,
        140751,
        568550,
        996349,
        424145,
        851944,
        279740,
        707539,
        135335,
        563134,
        990933,
        418729,
        846528,
        274324,
        702123,
        129919,
        557718,
        985517,
        413313,
        841112,
        268908,
        696707,
        124503,
        552302,
        980101,
        407897,
        835696,
        263492,
        691291,
        119087,
        546886,
        974685,
        402481,
        830280,
        258076,
        685875,
        113671,
        541470,
        969269,
        397065,
        824864,
        252660,
        680459,
        108255,
        536054,
        963853,
        391649,
        819448,
        247244,
        675043,
        102839,
        530638,
        958437,
        386233,
        814032,
        241828,
        669627,
        97423,
        525222,
        953021,
        380817,
        808616,
        236412,
        664211,
        92007,
        519806,
        947605,
        375401,
        803200,
        230996,
        658795,
        86591,
        514390,
        942189,
        369985,
        797784,
        225580,
        653379,
        81175,
        508974,
        936773,
        364569,
        792368,
        220164,
        647963,
        75759,
        503558,
        931357,
        359153,
        786952,
        214748,
        642547,
        70343,
        498142,
        925941,
        353737,
        781536,
        209332,
        637131,
        64927,
        492726,
        920525,
        348321,
        776120,
        203916,
        631715,
        59511,
        487310,
        915109,
        342905,
        770704,
        198500,
        626299,
        54095,
        481894,
        909693,
        337489,
        765288,
        193084,
        620883,
        48679,
        476478,
        904277,
        332073,
        759872,
        187668,
        615467,
        43263,
        471062,
        898861,
        326657,
        754456,
        182252,
        610051,
        37847,
        465646,
        893445,
        321241,
        749040,
        176836,
        604635,
        32431,
        460230,
        888029,
        315825,
        743624,
        171420,
        599219,
        27015,
    };

    public int lookup(int index) {
        return TABLE[index % TABLE.length];
    }
}
