// Generated by tools/gen_tables.py. Do not edit by hand.
#![allow(clippy::excessive_precision)]

/// Taylor coefficients of the correction functions in `z = p - 1/2`.
pub(crate) const RS_COEFFS: [[f64; 64]; 5] = [
    [
        3.8268343236508977173e-1,
        0.0,
        1.7489618723100817974,
        0.0,
        2.1180252076854963732,
        0.0,
        -8.7072166705114807392e-1,
        0.0,
        -3.4733112243465167073,
        0.0,
        -1.6626947308999324496,
        0.0,
        1.2167312889192321345,
        0.0,
        1.3014304161007975773,
        0.0,
        3.0511021827361672421e-2,
        0.0,
        -3.7558030515450952428e-1,
        0.0,
        -1.0857844165640659744e-1,
        0.0,
        5.1832902999549623376e-2,
        0.0,
        2.999948061990227592e-2,
        0.0,
        -2.275939670612564226e-3,
        0.0,
        -4.3826474165803383059e-3,
        0.0,
        -4.0642301837298469931e-4,
        0.0,
        4.0060977854221139279e-4,
        0.0,
        8.9710579913888412978e-5,
        0.0,
        -2.3025650027239107116e-5,
        0.0,
        -9.3800066019067924847e-6,
        0.0,
        6.3235149476091075042e-7,
        0.0,
        6.5510228192315016662e-7,
        0.0,
        2.2105237455526972587e-8,
        0.0,
        -3.322316176445628835e-8,
        0.0,
        -3.7349109899336560818e-9,
        0.0,
        1.2445067060797739195e-9,
        0.0,
        2.4768205376502191842e-10,
        0.0,
        -3.2842728168916271994e-11,
        0.0,
        -1.1305406852298404462e-11,
        0.0,
        4.5654639795885684149e-13,
        0.0,
        3.959848094522913316e-13,
        0.0,
        7.8495662180464916512e-15,
        0.0,
    ],
    [
        0.0,
        -5.365020525675069406e-2,
        0.0,
        1.102781874108148244e-1,
        0.0,
        1.2317200154315226313,
        0.0,
        1.2634964862799457884,
        0.0,
        -1.6951089975595030184,
        0.0,
        -2.999871196765010089,
        0.0,
        -1.0819944959899208643e-1,
        0.0,
        1.9407662946212712688,
        0.0,
        7.8384235615006865329e-1,
        0.0,
        -5.0548296679003659188e-1,
        0.0,
        -3.8450723496057974051e-1,
        0.0,
        3.7472646465315320676e-2,
        0.0,
        9.0920266109731763173e-2,
        0.0,
        1.0449237550064509218e-2,
        0.0,
        -1.2582979651583416497e-2,
        0.0,
        -3.3995037211512740851e-3,
        0.0,
        1.0410950537714891268e-3,
        0.0,
        5.0109490511184868604e-4,
        0.0,
        -3.9563596690031815595e-5,
        0.0,
        -4.7624592453571896387e-5,
        0.0,
        -1.8539355338085132273e-6,
        0.0,
        3.193691808006897204e-6,
        0.0,
        4.0907807608506066327e-7,
        0.0,
        -1.5446624332576632128e-7,
        0.0,
        -3.4663074917691331722e-8,
        0.0,
        5.1587112588061547924e-9,
        0.0,
        1.9845392556407945579e-9,
        0.0,
        -8.9208208625512455988e-11,
        0.0,
        -8.5810178077918708514e-11,
        0.0,
        -1.879955000613747949e-12,
        0.0,
        2.9178219641583896185e-12,
        0.0,
        2.2424667119821680738e-13,
    ],
    [
        5.1885428302931684938e-3,
        0.0,
        1.2378633552253898413e-3,
        0.0,
        -1.8137505725166997411e-1,
        0.0,
        1.4291492748532126541e-1,
        0.0,
        1.3303391766687565325,
        0.0,
        3.5224723534037336775e-1,
        0.0,
        -2.4210015958919507238,
        0.0,
        -1.6760787022538108853,
        0.0,
        1.3689416723328372184,
        0.0,
        1.5539019430222983221,
        0.0,
        -1.722164273472998052e-1,
        0.0,
        -6.359068055045430989e-1,
        0.0,
        -9.9116498730412081054e-2,
        0.0,
        1.4033480067387008951e-1,
        0.0,
        4.7823520198272922364e-2,
        0.0,
        -1.7356040641479780798e-2,
        0.0,
        -1.0225012534028591844e-2,
        0.0,
        9.2741491597948878994e-4,
        0.0,
        1.3572194372373385345e-3,
        0.0,
        6.41369012029388009e-5,
        0.0,
        -1.2300805698196629883e-4,
        0.0,
        -1.8313507404789202555e-5,
        0.0,
        7.8216286043226273085e-6,
        0.0,
        2.0087542484759945503e-6,
        0.0,
        -3.3532765393185713788e-7,
        0.0,
        -1.4616020917418231948e-7,
        0.0,
        7.2614973840398687398e-9,
        0.0,
        7.8948056790026744915e-9,
        0.0,
        1.9589858226723036305e-10,
        0.0,
        -3.3028020658880363736e-10,
        0.0,
        -2.8148975344356264159e-11,
        0.0,
        1.0839501648243524272e-11,
        0.0,
    ],
    [
        0.0,
        -2.6794321814389138085e-3,
        0.0,
        2.9953721091035149637e-2,
        0.0,
        -4.2570172541828697985e-2,
        0.0,
        -2.8997965779803887507e-1,
        0.0,
        4.8888319992354459725e-1,
        0.0,
        1.2308558763957460812,
        0.0,
        -8.2975607085274087042e-1,
        0.0,
        -2.2497635366665668665,
        0.0,
        7.8451399610054713794e-2,
        0.0,
        1.7467492800868894004,
        0.0,
        4.5968080979749935109e-1,
        0.0,
        -6.6193534710397749464e-1,
        0.0,
        -3.1590441036173634579e-1,
        0.0,
        1.2844792545207495989e-1,
        0.0,
        1.0073382716626152301e-1,
        0.0,
        -9.5301838488252677595e-3,
        0.0,
        -1.9264421687514088898e-2,
        0.0,
        -1.2464637158769291712e-3,
        0.0,
        2.424396964110308574e-3,
        0.0,
        4.3764769774185701828e-4,
        0.0,
        -2.0714032687001791276e-4,
        0.0,
        -6.2743445041865155604e-5,
        0.0,
        1.1575343814595669367e-5,
        0.0,
        5.8838549245403802065e-6,
        0.0,
        -3.1246774006962411839e-7,
        0.0,
        -4.0240657754968485637e-7,
        0.0,
        -1.1991107790261461644e-8,
        0.0,
        2.0963754164613609568e-8,
        0.0,
        2.0203581874281733602e-9,
        0.0,
        -8.4396852961225382201e-10,
        0.0,
        -1.3791471005550921921e-10,
        0.0,
        4.6275193690591076147e-11,
    ],
    [
        4.6483389361763381854e-4,
        0.0,
        -4.0226429461361883039e-3,
        0.0,
        3.8471770517961268836e-3,
        0.0,
        6.5811751358094860021e-2,
        0.0,
        -1.9604124343694449118e-1,
        0.0,
        -2.0854053686358853244e-1,
        0.0,
        9.5077541851417509458e-1,
        0.0,
        5.3415353129148739761e-1,
        0.0,
        -1.6763494411763400796,
        0.0,
        -1.0767471578751289928,
        0.0,
        1.2353393016565969853,
        0.0,
        1.0257825340057275772,
        0.0,
        -4.0124095793988544379e-1,
        0.0,
        -5.036663995108303448e-1,
        0.0,
        3.5734877955027449858e-2,
        0.0,
        1.4431763086785416624e-1,
        0.0,
        1.5091527417903469417e-2,
        0.0,
        -2.6098874779194361318e-2,
        0.0,
        -6.126628379519261749e-3,
        0.0,
        3.0775031298708411848e-3,
        0.0,
        1.1562478934088752316e-3,
        0.0,
        -2.2775966758472127514e-4,
        0.0,
        -1.4189637118181445517e-4,
        0.0,
        7.4648603079556422483e-6,
        0.0,
        1.2479701645402157021e-5,
        0.0,
        4.8639451822831621643e-7,
        0.0,
        -8.2102374559375044874e-7,
        0.0,
        -9.2232684259119098339e-8,
        0.0,
        4.1034505011710960785e-8,
        0.0,
        7.6375758194965450902e-9,
        0.0,
        -2.8190532677697627569e-9,
        0.0,
        -2.9742681685364911664e-8,
        0.0,
    ],
];

/// `B_2k` for k = 1..=30.
pub(crate) const BERNOULLI_2K: [f64; 30] = [
    1.6666666666666666667e-1,
    -3.3333333333333333333e-2,
    2.3809523809523809524e-2,
    -3.3333333333333333333e-2,
    7.5757575757575757576e-2,
    -2.5311355311355311355e-1,
    1.1666666666666666667,
    -7.0921568627450980392,
    5.4971177944862155388e+1,
    -5.2912424242424242424e+2,
    6.1921231884057971014e+3,
    -8.6580253113553113553e+4,
    1.4255171666666666667e+6,
    -2.7298231067816091954e+7,
    6.0158087390064236838e+8,
    -1.5116315767092156863e+10,
    4.2961464306116666667e+11,
    -1.3711655205088332772e+13,
    4.8833231897359316667e+14,
    -1.9296579341940068149e+16,
    8.41693047573682615e+17,
    -4.0338071854059455413e+19,
    2.1150748638081991606e+21,
    -1.2086626522296525935e+23,
    7.5008667460769643669e+24,
    -5.0387781014810689141e+26,
    3.6528776484818123335e+28,
    -2.8498769302450882226e+30,
    2.3865427499683627645e+32,
    -2.1399949257225333666e+34,
];

/// `B_2k / (2k)!` for k = 1..=30.
pub(crate) const BERNOULLI_2K_OVER_FACT: [f64; 30] = [
    8.3333333333333333333e-2,
    -1.3888888888888888889e-3,
    3.3068783068783068783e-5,
    -8.2671957671957671958e-7,
    2.0876756987868098979e-8,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.174868698558061873e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
    -5.7447906688722024453e-26,
    1.4551724756148649019e-27,
    -3.6859949406653101782e-29,
    9.336734257095044672e-31,
    -2.3650224157006299346e-32,
    5.9906717624821343047e-34,
    -1.5174548844682902617e-35,
    3.8437581254541882322e-37,
    -9.7363530726466910353e-39,
    2.4662470442006809571e-40,
    -6.2470767418207436931e-42,
    1.5824030244644914298e-43,
    -4.0082736859489359685e-45,
    1.0153075855569556312e-46,
    -2.5718041582418717499e-48,
];
