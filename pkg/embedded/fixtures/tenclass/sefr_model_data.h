/* Linear classifier model data. Generated file, do not edit. */
#ifndef SEFR_MODEL_DATA_H
#define SEFR_MODEL_DATA_H

#define SEFR_FEATURE_COUNT 256
#define SEFR_CLASS_COUNT 10
#define SEFR_SCORE_COUNT 10

/* Input: SEFR_FEATURE_COUNT bytes, each scaled by (1.0f / 255.0f).
 * SEFR_SCORE_COUNT == 1: score = dot(w[0], x) + bias[0];
 *   predicted index = score > 0 ? 1 : 0.
 * Otherwise: one score per class; predicted index = argmin,
 *   first minimum on ties. Index into sefr_classes. */

static const char *const sefr_classes[SEFR_CLASS_COUNT] = {
    "0",
    "1",
    "2",
    "3",
    "4",
    "5",
    "6",
    "7",
    "8",
    "9",
};

static const float sefr_weights[SEFR_SCORE_COUNT][SEFR_FEATURE_COUNT] = {
    { 0.0843519643f, 0.356346279f, 0.619433701f, -0.229542047f, 0.0788039267f, -0.307566017f, -0.314809799f, -0.179411769f, 0.659623742f, -0.00450054044f, -0.0175306536f, 0.623679817f, -0.0494390726f, 0.275051802f, 0.36712563f, -0.113919236f, 0.0105145089f, 0.586383641f, 0.231496945f, -0.380761117f, 0.158595905f, 0.404094309f, 0.649933875f, -0.145325422f, -0.162677854f, 0.154524148f, -0.181405798f, 0.113830596f, -0.0505097285f, -0.0477017835f, -0.0516066626f, -0.0105506368f, 0.60676676f, -0.109158166f, -0.281250685f, -0.205803201f, 0.0822575837f, 0.688967049f, 0.470152169f, -0.15351814f, -0.0691922307f, 0.713849902f, -0.17095378f, -0.168054834f, -0.168621898f, -0.378133923f, -0.150004357f, 0.0301358663f, 0.378678054f, -0.139017954f, -0.13592048f, -0.357118815f, -0.27002269f, 0.0960115716f, -0.353699863f, -0.363473594f, 0.110191599f, -0.0371788666f, -0.044405207f, -0.0583917871f, 0.0172366984f, 0.33939755f, 0.405764908f, 0.168041214f, 0.0321093798f, -0.263969094f, -0.401121825f, 0.239192516f, -0.0187517442f, 0.097844705f, 0.501876712f, -0.396766126f, 0.19009015f, -0.18389526f, -0.0558353029f, -0.228419602f, -0.289047271f, -0.210556716f, 0.278825521f, -0.276383787f, 0.228374019f, 0.246593416f, -0.298883915f, -0.123890273f, -0.0979276225f, 0.618913352f, -0.354665935f, -0.0852617249f, 0.0181185231f, -0.327828199f, 0.58845526f, 0.248450547f, 0.41258049f, 0.137893662f, -0.209179536f, 0.402319431f, -0.360664248f, -0.047912091f, -0.131273493f, -0.41567269f, 0.66746515f, 0.415283829f, -0.116561055f, 0.0592165142f, 0.0528355315f, -0.319749385f, 0.0105707655f, -0.088030234f, -0.0652261302f, 0.529092193f, 0.485709101f, -0.0598917566f, -0.163029194f, -0.456940204f, 0.417537987f, 0.257595301f, -0.117074125f, -0.0242517535f, 0.659002066f, -0.28997466f, -0.293429822f, 0.580696642f, -0.157874212f, 0.163359538f, 0.0156363063f, 0.239028201f, -0.220518485f, 0.0639598742f, 0.664839029f, 0.406015098f, -0.2990641f, 0.233827263f, 0.0792772248f, -0.212376133f, 0.394834995f, -0.0499204695f, 0.116756722f, 0.532030046f, -0.245679542f, 0.56541568f, -0.140980914f, 0.119247578f, 0.135540277f, 0.417666197f, -0.194611415f, -0.313420147f, 0.420752883f, -0.109525234f, 0.615355849f, 0.171974212f, 0.478525072f, -0.0896798074f, 0.45703426f, -0.164770395f, -0.270874053f, 0.358697891f, 0.563729763f, -0.350646138f, 0.615514934f, -0.198602721f, -0.186166719f, 0.62747097f, 0.0251288544f, -0.255087465f, 0.544732511f, -0.203404337f, -0.178234398f, 0.641061127f, 0.425568581f, -0.377663016f, 0.69993788f, -0.0536460951f, 0.725760698f, 0.171776891f, 0.297865391f, -0.250420541f, 0.635519505f, 0.619405687f, -0.0176073555f, 0.414989501f, 0.0245281886f, 0.736290932f, 0.387504935f, 0.225069329f, -0.273695648f, -0.253495365f, 0.464420527f, -0.132534355f, -0.275299907f, -0.0262455568f, -0.340613663f, -0.356709033f, 0.161585405f, -0.0455284417f, -0.108535931f, 0.402638763f, -0.274646819f, -0.358435065f, 0.617935121f, -0.295042306f, 0.702663064f, 0.0301546361f, 0.648722053f, 0.0922579467f, -0.0570633933f, -0.0482698977f, 0.255866528f, 0.0877943486f, -0.162142545f, -0.193445489f, 0.50221175f, 0.0246867184f, 0.653049529f, -0.0288529247f, 0.633519411f, -0.000508548517f, 0.335846663f, 0.643008292f, 0.040093448f, 0.267625898f, 0.704857588f, -0.111831158f, 0.398853689f, -0.118724369f, 0.0958931446f, -0.188628823f, 0.277777642f, 0.552930117f, 0.224934489f, -0.0795911774f, 0.282750338f, -0.175884962f, 0.0669515505f, 0.439013869f, -0.0282675438f, 0.0717524812f, -0.0995220467f, 0.735204399f, -0.08222045f, 0.0103800986f, 0.571731746f, 0.690449893f, 0.143487588f, -0.299711257f, 0.762342751f, -0.258653492f, 0.371215254f, 0.250465721f, -0.126922905f, 0.531443596f, -0.318970948f, -0.453247696f, 0.769281268f, 0.170690104f, 0.580673695f, 0.584709406f },
    { -0.314032316f, -0.273797303f, 0.464752018f, 0.730613887f, -0.0409254432f, 0.101150654f, -0.239421844f, -0.10183467f, -0.299297422f, 0.117788456f, -0.00255291234f, -0.514292538f, 0.0402877592f, -0.0213341489f, 0.22423251f, -0.0168382395f, -0.194596261f, -0.271066904f, -0.223654047f, 0.534240842f, -0.272509545f, -0.183974147f, 0.551140368f, 0.0373156369f, 0.262187064f, -0.176878393f, -0.256707489f, 0.265772432f, 0.396941006f, 0.0485624894f, -0.218151197f, 0.38986966f, -0.238438904f, 0.330731362f, -0.155707762f, -0.299845248f, 0.211182624f, -0.257536471f, -0.166132033f, -0.1569345f, -0.0355152749f, 0.505905628f, 0.532699466f, -0.105778344f, -0.259013206f, 0.573374391f, -0.0574156903f, -0.291201979f, -0.220155582f, -0.193854928f, -0.209930703f, -0.0349962078f, 0.00314023788f, -0.225233346f, 0.579644382f, -0.214593098f, -0.182751536f, -0.170248985f, -0.0464182794f, -0.307908058f, -0.36147368f, 0.596001387f, 0.694300652f, 0.545197189f, 0.0109772068f, 0.341394484f, 0.671352565f, -0.146884188f, 0.422206372f, 0.536945164f, -0.0883836225f, -0.138428509f, -0.148020923f, 0.142751992f, -0.0200570635f, -0.0685992464f, 0.780028701f, 0.0156390313f, 0.0428379551f, -0.12814638f, 0.0445846952f, -0.325359136f, -0.0796478987f, 0.549063742f, -0.246513113f, 0.765423179f, 0.235646114f, -0.205484003f, -0.245057508f, 0.483412325f, -0.198706731f, 0.180515945f, -0.306540459f, 0.0293677934f, 0.050266616f, -0.281367332f, 0.565086842f, -0.162771493f, -0.0487288535f, 0.616920769f, 0.421413988f, 0.631665707f, 0.472098827f, -0.278608561f, 0.575888216f, -0.0858185962f, -0.208787411f, 0.670897663f, 0.0753913671f, -0.125752151f, 0.0303409062f, 0.17292574f, 0.221889287f, -0.347970366f, -0.0593666397f, 0.232984334f, 0.639449358f, -0.249333635f, 0.339966238f, -0.213895708f, -0.39666754f, 0.153638557f, 0.585145354f, 0.0446748883f, 0.380645126f, 0.235806823f, -0.381120354f, -0.160981923f, 0.460052192f, -0.221531242f, -0.0360961631f, 0.342423409f, -0.286785275f, 0.471378982f, 0.667091191f, -0.380857378f, 0.0307533517f, -0.265951961f, 0.705097318f, 0.112089656f, -0.0304714441f, -0.0235588402f, -0.351122081f, 0.623031437f, -0.105686918f, -0.0123608373f, 0.432979405f, 0.203657925f, 0.141582176f, -0.194538593f, 0.370677471f, -0.165475875f, -0.216005206f, -0.371328741f, 0.279652596f, 0.276003629f, -0.308499366f, 0.525051236f, 0.194418609f, -0.292638123f, 0.446072727f, 0.255711704f, 0.662153125f, -0.17306453f, 0.434459478f, 0.1691228f, 0.653627753f, 0.655127287f, 0.358718038f, 0.142281801f, 0.406624287f, -0.0087039927f, 0.391513944f, -0.472029746f, 0.21411477f, -0.107221082f, 0.0143030938f, -0.142144755f, -0.25395003f, -0.355155468f, 0.297921658f, 0.0802503973f, 0.166207895f, -0.23146081f, 0.287090808f, 0.0450824872f, -0.191739783f, -0.00152265583f, -0.146120414f, -0.134045318f, 0.167186603f, 0.118278421f, -0.172616377f, 0.123118065f, -0.231883392f, -0.126532406f, 0.513867319f, 0.439140379f, 0.498674393f, 0.348700911f, 0.677958608f, -0.0925836414f, 0.204958797f, 0.657514274f, -0.271656275f, 0.617988944f, -0.1112203f, 0.520881653f, -0.0910783932f, -0.31107989f, 0.181931928f, -0.0989647284f, -0.0057582478f, -0.0650015548f, 0.439392775f, 0.795850694f, -0.18501994f, -0.246799394f, 0.710653841f, -0.115558326f, -0.0796106383f, 0.608012438f, -0.0594114326f, 0.342086911f, -0.322979599f, 0.00295944186f, 0.214781567f, 0.0706826746f, 0.167943835f, 0.141923651f, -0.176032081f, -0.154881492f, -0.0383826233f, -0.248264894f, -0.231913313f, -0.178499535f, -0.160525396f, -0.0849879906f, 0.606940687f, 0.669055283f, -0.228785887f, 0.00343653676f, -0.122224949f, -0.316696703f, -0.234024018f, 0.17345503f, -0.0453829691f, -0.285388798f, 0.672545612f, -0.268018544f, 0.427584022f, 0.045994658f, 0.378507674f, 0.683868647f, 0.158062249f, 0.111357354f },
    { -0.279306084f, -0.060243208f, -0.175781488f, 0.29041335f, 0.690036476f, -0.247046679f, 0.249629572f, 0.518964648f, 0.592591286f, 0.631518066f, -0.0640633926f, 0.432084233f, -0.322428167f, -0.047129117f, 0.751943171f, 0.109752089f, 0.229226381f, -0.115332216f, -0.282355636f, -0.167800903f, -0.292960852f, -0.144594759f, -0.321974039f, -0.379015505f, 0.224128902f, -0.0128439674f, 0.193591207f, -0.133375108f, -0.0452325828f, -0.0919275358f, -0.0264861938f, 0.176107481f, 0.1259453f, 0.492014498f, -0.158943057f, 0.597010493f, 0.50738728f, -0.123931162f, -0.0342241637f, -0.214005023f, 0.700994968f, 0.0970300362f, -0.192633688f, 0.0700795949f, -0.171005115f, 0.209473431f, -0.273677766f, 0.191602752f, 0.388534129f, 0.758976519f, 0.703529298f, 0.0859058127f, -0.277929246f, 0.476268291f, 0.0109211998f, -0.344684333f, -0.299293667f, -0.136862382f, 0.239886209f, -0.167290732f, 0.343758583f, -0.226507649f, -0.163480565f, -0.308970869f, 0.248677f, -0.0326380059f, 0.0135397548f, -0.335810661f, -0.284986347f, 0.521686435f, -0.225171313f, 0.263481647f, -0.155726686f, -0.00143740245f, -0.231032997f, 0.637045801f, 0.582639039f, -0.167139351f, 0.283497781f, 0.244948581f, 0.0914351866f, 0.269296914f, -0.202921987f, 0.0350375026f, -0.2281681f, -0.105138063f, -0.335971177f, -0.188827485f, 0.527969062f, 0.671479523f, 0.692363143f, 0.271492511f, -0.023209393f, 0.32095623f, 0.610373557f, 0.60503161f, 0.504945457f, 0.023834588f, 0.303124487f, -0.171847627f, -0.336247116f, -0.216712326f, 0.0244807974f, -0.291222781f, 0.538315415f, -0.294723988f, -0.169721514f, -0.175973192f, 0.682276964f, 0.0804171413f, -0.312374443f, -0.158009738f, -0.183532372f, 0.335370004f, -0.180514097f, -0.157559812f, -0.166583464f, 0.0709287748f, 0.256861418f, 0.351665914f, 0.148459092f, 0.338157535f, -0.160219863f, 0.270413935f, 0.525752604f, 0.295419753f, 0.642448902f, -0.125432149f, -0.23531796f, -0.147502631f, 0.19467923f, -0.565890968f, 0.365327209f, 0.262898892f, -0.289752632f, 0.181724444f, 0.038334325f, 0.633027494f, -0.262736887f, 0.113413237f, 0.0985519066f, 0.0293347426f, 0.0717026666f, -0.276197463f, 0.024155423f, 0.229510158f, 0.663075507f, 0.5548383f, 0.0713353455f, 0.162788793f, 0.682238638f, 0.727205336f, -0.143773332f, 0.540255427f, 0.523439288f, -0.0161016956f, -0.198056892f, 0.538654506f, 0.432314813f, -0.220581532f, -0.218737274f, -0.197217137f, -0.0877520442f, -0.150031641f, -0.262062401f, 0.0988687649f, -0.213096946f, -0.161903918f, 0.483412176f, -0.393450528f, -0.163399816f, -0.496013463f, -0.325364798f, 0.577073336f, -0.18654035f, -0.0296920501f, 0.676498592f, -0.237476334f, -0.264764547f, 0.581653893f, 0.172113344f, -0.0792193636f, 0.605142474f, 0.223458737f, -0.0534223542f, 0.64331156f, -0.267876238f, -0.363351941f, -0.0571917407f, 0.177824065f, -0.342416823f, 0.686626673f, -0.19659631f, 0.236669257f, 0.759574473f, -0.0765970051f, 0.58101362f, 0.07355652f, 0.0468031913f, 0.0413956121f, 0.0425046161f, 0.446844369f, -0.26988098f, 0.712904215f, 0.148449942f, -0.199768335f, -0.187327459f, -0.105025351f, 0.50658673f, 0.737454057f, -0.425485492f, -0.190338746f, -0.279546678f, -0.126926765f, 0.655829966f, -0.00551372766f, 0.524373472f, -0.467930228f, -0.301815748f, 0.651728272f, -0.285295814f, 0.284059703f, -0.14648588f, 0.104274571f, 0.176485211f, -0.160491779f, 0.0656905174f, -0.233717188f, 0.0656529218f, 0.0406860039f, -0.210990325f, 0.335212499f, 0.134042829f, 0.159250334f, 0.149401486f, -0.179259971f, 0.305467099f, 0.465336919f, -0.130577236f, -0.116073124f, -0.0472131856f, -0.21812059f, 0.0530081093f, -0.406105399f, -0.107131034f, 0.765360773f, -0.18061766f, -0.357594728f, -0.194897056f, 0.390937746f, 0.32434684f, 0.196727946f, -0.186471105f, 0.591942966f, 0.384975642f, -0.195575938f },
    { -0.199020654f, 0.506127238f, 0.356131732f, 0.139515251f, -0.130444467f, 0.207633197f, -0.160039276f, 0.0381485336f, -0.11156518f, 0.123762712f, 0.101497501f, -0.429815888f, 0.206555322f, 0.116225868f, -0.239988878f, -0.0778504834f, 0.398220241f, 0.120205693f, 0.450079262f, 0.457977235f, 0.501503944f, -0.300522298f, 0.667175233f, 0.578637242f, -0.338375092f, -0.216627866f, 0.635028303f, -0.0490981489f, -0.0238793958f, 0.569651365f, 0.671916127f, 0.53594768f, -0.3581824f, -0.109870054f, 0.460363418f, 0.75348711f, -0.0991393477f, -0.0803786591f, -0.0316365659f, 0.549155891f, -0.238216937f, 0.046803873f, -0.165228561f, 0.278462052f, 0.055452738f, -0.0552516989f, -0.320707798f, -0.287400931f, -0.235672757f, 0.0111751808f, 0.0383296497f, 0.0102237565f, 0.403726697f, -0.122760646f, 0.544521689f, 0.205030054f, -0.20532079f, -0.146569595f, -0.302949667f, 0.397291899f, 0.524479687f, -0.393863261f, -0.430603027f, -0.223019123f, 0.113763846f, 0.199413911f, 0.309811532f, 0.53927511f, 0.081459254f, -0.251268923f, 0.330450803f, 0.63754189f, -0.18952547f, -0.0364231355f, 0.215240344f, -0.25342235f, -0.296169639f, -0.0153554408f, -0.211868569f, -0.108089946f, 0.156873375f, 0.621578634f, 0.228055909f, 0.00602637231f, 0.103985138f, 0.00479689799f, 0.262437344f, -0.118322723f, 0.788674116f, 0.100369997f, -0.230499506f, 0.284340262f, 0.642869353f, -0.419930637f, 0.151188269f, 0.281603962f, 0.671442986f, -0.103035249f, 0.527266264f, 0.402813613f, -0.169281706f, -0.0352005474f, -0.0978927612f, -0.402818143f, 0.258000642f, 0.666714966f, -0.198232815f, 0.790934503f, -0.161474988f, -0.0278097466f, -0.460973382f, -0.122566f, 0.384770274f, 0.261844248f, 0.0856606439f, -0.046879109f, -0.197240755f, 0.101004146f, 0.111019619f, -0.122121871f, 0.493208736f, -0.198966056f, -0.226564705f, -0.0925427899f, -0.16924423f, -0.0835927203f, 0.700085759f, -0.176230788f, -0.224309772f, 0.287721008f, 0.639989316f, -0.206514999f, -0.290987402f, 0.572590232f, -0.0225181747f, -0.268281877f, -0.302509278f, 0.262230158f, 0.233840838f, 0.0384844393f, -0.0697762817f, 0.771479547f, -0.20442526f, 0.197282419f, 0.653120935f, -0.0913211778f, -0.424373955f, 0.133660227f, 0.0107561834f, -0.0245375801f, -0.19968541f, -0.105542153f, 0.641541243f, 0.193784952f, 0.418980658f, 0.0397394262f, 0.0037956906f, 0.324037582f, -0.153213561f, -0.0207516123f, -0.060323175f, -0.139513507f, 0.085617356f, 0.255552083f, 0.57127738f, 0.153587446f, 0.429130316f, -0.125300795f, 0.6074965f, 0.508611321f, -0.317513764f, 0.213508859f, -0.156938761f, -0.459058404f, 0.106086463f, 0.18475616f, -0.248154745f, 0.388934821f, -0.158581287f, 0.250289232f, -0.238632828f, -0.239074185f, -0.284625351f, -0.275973707f, -0.265419334f, 0.427745461f, -0.191289306f, 0.347000927f, 0.242750645f, 0.0659248829f, -0.132385775f, 0.718638062f, -0.187520996f, -0.106911987f, -0.247409925f, 0.302731752f, -0.315973192f, -0.30611214f, -0.311283082f, -0.0292584375f, -0.433733791f, 0.270437151f, -0.365775257f, 0.717125714f, 0.493034422f, 0.688229263f, 0.462614894f, -0.107520446f, 0.499570906f, 0.0598656014f, -0.19047904f, -0.0576355159f, 0.02719111f, -0.0144528151f, 0.152436092f, -0.0683442205f, 0.292879701f, 0.309903532f, 0.45457679f, 0.467822433f, 0.45708406f, -0.175278798f, 0.787624121f, -0.111781403f, -0.0267149713f, -0.0934031233f, -0.281145155f, -0.230671614f, -0.154483646f, 0.719554186f, 0.533301413f, 0.0780851766f, -0.178538039f, -0.115023516f, -0.265407383f, 0.342740029f, 0.571244299f, 0.652960896f, -0.351896137f, 0.208514169f, -0.0183305498f, -0.0463560075f, 0.697159886f, 0.705755353f, -0.130218521f, 0.13068758f, -0.0841850787f, -0.121433429f, 0.115236126f, 0.0820004344f, -0.080369629f, 0.579141855f, -0.0951210111f, -0.387234032f, -0.0505302437f, -0.247389525f },
    { 0.0422337726f, -0.174656376f, -0.237061501f, -0.405550092f, -0.0122474711f, 0.384457618f, 0.384321153f, 0.188178942f, 0.45635438f, 0.145389035f, 0.107961223f, 0.669963002f, 0.490899712f, -0.138077825f, -0.0945526436f, 0.333452225f, 0.197532743f, 0.629648328f, -0.282818764f, -0.333116561f, -0.270447105f, -0.309537411f, -0.14967905f, 0.188041642f, -0.218015999f, -0.0563297458f, -0.123193271f, -0.070139654f, 0.0272629242f, 0.431692243f, -0.24465476f, 0.446454197f, -0.110099956f, 0.048056595f, 0.791604877f, -0.0325525217f, -0.229289412f, 0.290976822f, -0.267881989f, 0.0748810321f, -0.188820943f, -0.313867033f, 0.0533617176f, 0.321892798f, 0.0837302506f, 0.707097948f, -0.0928855762f, 0.211145088f, 0.18529743f, -0.27574122f, 0.685831308f, 0.390690356f, -0.144952759f, -0.134720534f, 0.115023769f, 0.262075633f, 0.741186261f, -0.0916644484f, -0.166954949f, 0.613765001f, -0.35253039f, 0.291455358f, 0.604136765f, 0.480921745f, -0.159028947f, 0.685656726f, -0.163264781f, 0.277429432f, 0.759854734f, -0.279325008f, 0.762802839f, -0.102705918f, 0.518086016f, 0.180951327f, 0.256462783f, -0.285853565f, -0.268859297f, 0.303980589f, 0.466618508f, 0.549194932f, 0.0255251173f, 0.428523362f, -0.26397723f, -0.216679737f, -0.123327196f, 0.0498279706f, -0.279061317f, 0.457695484f, -0.178762063f, -0.343317986f, 0.315314531f, -0.0635482147f, -0.302451313f, -0.398875147f, 0.0467041135f, -0.150241598f, 0.549387693f, 0.121718243f, -0.442718983f, -0.132638529f, -0.0541285723f, -0.175074384f, -0.24940744f, 0.55131489f, -0.405171037f, 0.155289337f, -0.0425653644f, 0.584745228f, 0.592082858f, -0.0636057481f, 0.377164125f, 0.248309895f, -0.0115963072f, 0.154273272f, -0.0274528004f, 0.339066207f, 0.399617672f, 0.354987115f, -0.187443376f, -0.247399136f, 0.480671138f, -0.152579814f, -0.256039739f, -0.0781301633f, -0.392553747f, -0.438086659f, 0.0164638907f, -0.220140621f, 0.236088261f, 0.677451432f, -0.193890661f, 0.508273661f, 0.705813289f, 0.0737639219f, -0.160013616f, -0.0735047609f, 0.528760552f, -0.252491504f, 0.130523339f, 0.21405074f, -0.149589449f, 0.722296f, 0.016508352f, 0.168485582f, 0.667873502f, 0.192412347f, 0.184410289f, 0.204326063f, -0.19303681f, 0.171745136f, -0.126011208f, -0.0941262916f, 0.0343569033f, -0.293956637f, 0.637804449f, -0.086230047f, 0.525664926f, -0.412679434f, -0.379475892f, -0.228756547f, -0.0207182039f, -0.193199962f, -0.231513694f, 0.468390822f, -0.218637973f, -0.272820055f, -0.326666027f, -0.258029282f, -0.35318917f, 0.295145363f, -0.258313596f, 0.447191f, -0.339989781f, 0.171960026f, 0.429779142f, -0.28300333f, 0.0111700436f, -0.28590557f, 0.427387148f, 0.39902398f, -0.224540308f, 0.668237209f, -0.0278717969f, -0.320673048f, 0.261113822f, 0.635459065f, -0.208236158f, 0.434179008f, 0.0268878769f, -0.309315801f, 0.494273782f, -0.173703f, -0.212256715f, -0.150839075f, -0.383731514f, -0.25330466f, 0.359481722f, -0.192992926f, -0.32348004f, -0.22535558f, -0.156811625f, -0.264832437f, 0.266332418f, 0.107861795f, 0.133169368f, 0.352065861f, 0.0766827762f, -0.177025959f, -0.0980618373f, -0.0852905214f, 0.12940599f, 0.573128045f, 0.0744388103f, 0.108555153f, -0.421791703f, 0.040102154f, -0.0913687199f, -0.240851238f, 0.441855431f, 0.720861316f, 0.365079015f, 0.084577471f, -0.145265982f, 0.297207803f, 0.287251532f, 0.178055272f, -0.0360723548f, 0.654479444f, -0.211112425f, 0.0167728793f, 0.257990301f, 0.0286056697f, -0.341913313f, -0.0789730176f, 0.0876847282f, -0.105611645f, -0.0428890027f, -0.273725212f, 0.358033448f, 0.110419691f, -0.0230790172f, -0.307622671f, 0.141666844f, -0.322947443f, -0.0768571869f, -0.320093274f, -0.133526236f, 0.50479877f, 0.0828598887f, 0.150112972f, -0.116333224f, 0.653806686f, 0.375567704f, -0.248994395f, -0.485364586f, 0.29689163f },
    { 0.685702085f, -0.116096564f, -0.158368289f, 0.588869929f, -0.13227503f, -0.0776995644f, 0.509110212f, 0.406574637f, -0.246801257f, 0.160554752f, -0.198457792f, 0.493334293f, 0.243773282f, 0.721863627f, -0.280828387f, 0.319939077f, -0.296167135f, 0.738360167f, -0.184383363f, -0.22817418f, -0.299130261f, 0.295654804f, -0.397222728f, 0.297015071f, 0.201706186f, -0.205631867f, -0.0326631367f, -0.0910540223f, -0.0336667672f, -0.159561381f, 0.739618838f, -0.386710256f, -0.26049915f, -0.0440393873f, 0.535587251f, -0.312407255f, -0.302348047f, 0.546279728f, 0.620542347f, 0.374688715f, -0.256163239f, -0.249868885f, -0.00409283489f, -0.0758183673f, 0.338980794f, -0.0448182598f, -0.0768725723f, 0.340422124f, 0.639426887f, -0.0751075f, -0.078189671f, -0.215871051f, 0.136759549f, -0.243096098f, 0.688591063f, 0.0832616314f, -0.154467449f, 0.20084165f, 0.0565266311f, 0.0516949482f, 0.611226499f, -0.237798661f, -0.459555894f, -0.352520674f, -0.204869717f, 0.0892371163f, -0.262138814f, -0.127270773f, 0.235146359f, -0.168852374f, -0.21027416f, -0.313439637f, -0.33643496f, -0.294320643f, 0.776302993f, -0.28451252f, 0.657881081f, -0.185297057f, 0.0934488848f, -0.212120891f, 0.0547411852f, -0.0665335655f, -0.201479614f, -0.169347867f, 0.606558919f, -0.176534504f, -0.177673817f, -0.315331817f, -0.0174455941f, 0.709298491f, 0.0331318937f, 0.563014984f, -0.0764355883f, -0.192620307f, -0.136468902f, -0.237755656f, -0.34875989f, 0.203256249f, 0.238936409f, 0.635450363f, -0.292863756f, -0.252611101f, -0.321473479f, 0.269132584f, -0.370904535f, 0.470693499f, 0.479645371f, -0.279082984f, 0.395349741f, -0.102032818f, -0.452764243f, -0.110532023f, -0.0836973414f, 0.221460953f, 0.430562824f, -0.227408454f, -0.541204989f, 0.150792435f, 0.483487248f, 0.0478731617f, -0.399201483f, -0.158853456f, -0.0981354788f, 0.607438564f, -0.207751274f, 0.192453384f, 0.145043314f, -0.168800414f, 0.0131629771f, 0.638113141f, 0.400738776f, 0.356010824f, 0.746099412f, -0.235744178f, 0.496414602f, 0.165850833f, 0.524914324f, 0.0840187222f, -0.24623315f, 0.661044836f, -0.120136499f, -0.464449435f, 0.00524479523f, 0.501610994f, -0.218015462f, 0.636319518f, -0.234029084f, -0.211097136f, 0.0284845252f, -0.128136843f, -0.12139485f, 0.553425193f, 0.109795347f, 0.181469202f, -0.105322741f, 0.270160109f, -0.161185771f, -0.0905426219f, -0.101267807f, 0.0751801506f, -0.158731207f, -0.211420745f, 0.272106946f, 0.16835694f, -0.0365258716f, 0.685124874f, 0.643922329f, 0.443700671f, -0.122477159f, 0.670689821f, -0.219731003f, 0.327470899f, 0.621508598f, 0.446561575f, -0.0562133119f, 0.121095777f, 0.130972713f, 0.469794899f, -0.273661941f, -0.345538527f, -0.00486817304f, -0.234132811f, 0.176377371f, 0.429052323f, -0.255525887f, -0.277772903f, -0.205894306f, -0.199486226f, 0.628700614f, -0.285254121f, 0.312318951f, 0.0661107004f, 0.0554457568f, -0.155573577f, 0.0987493694f, -0.0585552417f, 0.44865939f, 0.545119643f, 0.675100803f, 0.713831544f, -0.0425156578f, 0.285945177f, 0.306647539f, -0.344098061f, 0.315800369f, -0.325021356f, -0.231635988f, 0.197589532f, -0.016550798f, 0.135580242f, 0.620694399f, -0.122006126f, 0.0633415803f, 0.131123275f, 0.574944496f, -0.250025958f, -0.396224141f, -0.0270809103f, -0.0287514478f, -0.26275754f, -0.204045236f, -0.0706876293f, -0.311176807f, -0.277064651f, -0.195106804f, -0.26380381f, 0.243297249f, 0.158066362f, -0.0561863594f, -0.246308237f, 0.0136443423f, 0.0670914352f, 0.707953274f, -0.248866618f, -0.187827766f, 0.0512337126f, -0.202722028f, 0.101461671f, 0.0552685075f, -0.0283228774f, -0.0871970877f, -0.251351058f, -0.167798221f, 0.553581536f, -0.220421478f, -0.191588745f, 0.60787642f, 0.581001639f, 0.483431697f, -0.37674278f, -0.158144072f, 0.0345710218f, -0.197961763f, 0.134719193f, 0.730388224f, 0.162225932f },
    { 0.155340597f, -0.289906532f, -0.158153325f, 0.159284756f, 0.614200234f, 0.131981358f, 0.231590703f, -0.114238292f, 0.713789344f, -0.173940569f, -0.226105988f, 0.285966873f, -0.284079105f, -0.260739863f, -0.173977107f, 0.0801635906f, 0.526373863f, 0.28163141f, -0.229202151f, 0.615870655f, -0.065694876f, -0.278129965f, 0.290348023f, -0.0357084237f, 0.310216993f, 0.201691613f, -0.229879305f, -0.132982552f, -0.0929813907f, 0.547038913f, -0.150065154f, -0.176735103f, -0.152818561f, 0.346762359f, -0.327348292f, 0.240197286f, 0.606499195f, 0.236099854f, -0.214276776f, -0.24315916f, 0.405971348f, -0.148359954f, 0.124200016f, -0.270641476f, 0.0197319947f, -0.351314932f, 0.377229512f, 0.299054861f, 0.398141623f, -0.0391305797f, 0.693034768f, -0.104471155f, -0.246865973f, 0.671677351f, -0.316554308f, 0.0691196173f, 0.718841434f, 0.073292546f, -0.236648262f, -0.134402171f, -0.0836311877f, 0.590729713f, 0.60617578f, 0.704433441f, -0.0813030526f, 0.326933742f, -0.36405316f, -0.224576846f, 0.0575055219f, -0.17577672f, 0.60206002f, 0.503541648f, 0.638160765f, 0.0244686678f, -0.140620127f, 0.52241385f, 0.21270287f, 0.0463947579f, -0.123371772f, 0.511141717f, -0.243016988f, -0.139090821f, 0.396563768f, 0.251345962f, 0.126578882f, -0.0990753323f, 0.551962078f, 0.671222091f, -0.0920421556f, -0.284803331f, -0.108270034f, -0.384270012f, 0.409797847f, 0.170403421f, 0.788740635f, 0.369918078f, -0.326111227f, 0.225764498f, 0.296468794f, -0.381400168f, -0.276241392f, 0.582958758f, 0.447227597f, -0.275975287f, -0.307532102f, -0.311220765f, 0.752855599f, -0.158233181f, 0.448145837f, 0.16859968f, 0.536441147f, -0.170999199f, -0.25488019f, 0.543473959f, 0.139746085f, 0.049567394f, 0.0304786731f, 0.0643086731f, 0.0366029032f, 0.739497662f, -0.343638748f, 0.487636387f, 0.362249434f, 0.382567674f, -0.00906143058f, 0.436867595f, -0.357578814f, 0.285441756f, -0.143892795f, -0.476190537f, -0.0846313611f, 0.403712094f, -0.056936875f, 0.575892091f, 0.620910466f, 0.49627918f, 0.120355889f, -0.100391887f, 0.628275454f, -0.157103211f, 0.430785775f, -0.141694188f, 0.556192577f, -0.266188085f, -0.145326912f, 0.221588194f, -0.394778371f, -0.274326921f, -0.321570337f, -0.14974089f, -0.111981153f, -0.216827989f, -0.197490379f, 0.000371386763f, -0.249934629f, -0.0516755134f, 0.232268095f, 0.0194174107f, -0.251160145f, 0.479394913f, -0.209092721f, 0.798098207f, -0.188347548f, 0.517066777f, -0.0120689999f, -0.280293554f, 0.0937340409f, -0.212716654f, -0.459412843f, 0.0935117304f, 0.00548531627f, -0.36530599f, -0.0482957177f, 0.0792371109f, -0.0579170622f, 0.478486806f, -0.278725505f, -0.0150384568f, -0.0610136054f, 0.31065762f, -0.162419677f, -0.204197779f, -0.176035061f, -0.11278449f, -0.298900515f, -0.312714547f, 0.479902208f, 0.405385405f, -0.135328665f, 0.739760399f, -0.432436049f, 0.0409546085f, 0.533446312f, -0.256525278f, 0.305695534f, -0.115739383f, -0.390012026f, 0.0148843173f, -0.372793883f, 0.526380777f, 0.580170333f, -0.139600113f, -0.127951622f, -0.334151208f, -0.0936761945f, 0.049537953f, 0.126527578f, 0.0399198905f, -0.196359292f, -0.084651351f, -0.250171363f, -0.138995022f, 0.166623607f, -0.118660234f, -0.432586312f, -0.0260323975f, 0.138297349f, 0.220613226f, -0.234915853f, -0.317394435f, -0.0455970056f, -0.183979988f, 0.149356306f, -0.283141524f, -0.348252982f, -0.0536254607f, -0.241289407f, 0.0485129207f, 0.130954206f, -0.216949239f, 0.109868191f, 0.0114085702f, -0.0833882242f, 0.592507184f, 0.417555273f, 0.155074507f, 0.453938901f, -0.249357551f, -0.0767748728f, 0.0139888478f, -0.00868139323f, 0.306801498f, -0.0422415808f, 0.66032815f, 0.583977461f, -0.0477523096f, 0.560118258f, -0.259474814f, -0.379095703f, 0.455290526f, 0.700744033f, 0.0229797121f, -0.285231173f, 0.0785122961f, -0.271757036f, -0.140607893f },
    { 0.114183336f, 0.653882027f, -0.165372834f, -0.374537826f, -0.214025974f, 0.12198168f, -0.315127224f, -0.0618225075f, -0.338215977f, -0.26091966f, 0.199929744f, 0.22688356f, -0.158266187f, 0.124106571f, 0.368795097f, -0.222359747f, -0.431050897f, -0.210368589f, 0.745829046f, 0.599028468f, 0.716970086f, 0.626873612f, -0.103010885f, 0.304682136f, -0.132262439f, 0.156886682f, 0.276269048f, 0.791522324f, -0.124704711f, -0.186834976f, -0.123847753f, -0.18614383f, 0.179870933f, -0.15768002f, 0.590337217f, 0.16020672f, -0.300836325f, -0.191650972f, 0.462094337f, -0.28917262f, 0.393409669f, -0.253148407f, -0.143912524f, -0.19011943f, 0.184798941f, -0.365842909f, 0.380257159f, -0.168725923f, -0.231849581f, 0.0265809055f, -0.257653683f, -0.287873924f, 0.410335451f, -0.169257984f, -0.262981057f, 0.424481779f, 0.281159997f, 0.40565002f, 0.610797405f, 0.0910430551f, 0.40169093f, 0.229493439f, 0.409854174f, -0.0594720766f, -0.0122070722f, -0.394061208f, 0.240574673f, 0.257314652f, -0.0552553944f, -0.272645265f, -0.205985323f, -0.230787829f, 0.455284536f, 0.0552635528f, -0.159963205f, 0.482344151f, 0.704773903f, -0.21673657f, -0.277589202f, 0.409576088f, -0.164838076f, -0.277299792f, 0.705400467f, 0.0694257095f, 0.806965828f, -0.0623122565f, 0.340539724f, 0.64233619f, -0.393114895f, 0.650184572f, -0.217901871f, -0.202684358f, 0.55054611f, 0.622215033f, -0.0550627075f, -0.459793776f, 0.160396561f, -0.198874667f, -0.478420675f, 0.0573777221f, 0.245703578f, -0.249232888f, -0.154492527f, 0.746399403f, -0.208257347f, -0.00553689199f, -0.224461183f, -0.273930073f, 0.0240131691f, 0.134452254f, 0.562880635f, 0.394751012f, 0.670072019f, -0.325411826f, -0.11906267f, -0.181794778f, 0.112481408f, -0.142889068f, -0.180890232f, 0.135675669f, 0.570705593f, -0.323791891f, -0.120917961f, -0.217418805f, 0.0977117196f, 0.452242643f, 0.671481907f, 0.807874739f, 0.696326256f, -0.176067352f, -0.311576635f, 0.403219223f, -0.1358217f, -0.159395561f, -0.116420768f, -0.0777560696f, -0.239418909f, -0.17093654f, -0.230485588f, -0.316559941f, 0.119164422f, -0.0682030246f, 0.0208644718f, 0.15649797f, 0.205341727f, -0.253343821f, -0.192121044f, -0.205265999f, -0.126782253f, -0.210806116f, 0.0238263234f, -0.126508713f, -0.253853291f, 0.639372528f, -0.246829793f, -0.183056682f, -0.143182606f, 0.362928867f, 0.657642365f, 0.362997293f, 0.62069416f, -0.144056052f, 0.113069877f, 0.0136722047f, -0.230823606f, -0.183397859f, -0.149406984f, 0.425512195f, -0.203026116f, -0.393408298f, -0.0307519641f, 0.417961419f, -0.121368743f, 0.0437945202f, -0.298801214f, -0.157169431f, 0.362964243f, -0.108657114f, 0.0796400234f, 0.455369204f, -0.25367853f, -0.163630188f, -0.0415942967f, 0.00194575719f, 0.394975603f, 0.566013873f, 0.569599092f, -0.379332989f, -0.318340719f, -0.0739891306f, 0.394808948f, -0.0299654007f, 0.504329145f, 0.231360853f, 0.510092139f, 0.0633262619f, -0.215627268f, 0.109352656f, 0.658364475f, -0.283623934f, -0.145904705f, 0.695873976f, 0.249732777f, -0.15454118f, 0.756814003f, -0.255185157f, 0.213802427f, -0.0325241499f, -0.231580406f, -0.161766425f, -0.127525941f, -0.259423554f, -0.223155677f, -0.189623103f, 0.0540643148f, -0.243861794f, -0.198790789f, 0.684311211f, -0.254170656f, -0.0962281078f, 0.173524112f, -0.11828839f, -0.0532960929f, 0.00712783867f, 0.589399159f, 0.345157444f, -0.192771122f, -0.0461547747f, -0.23336488f, 0.0896364599f, -0.203672752f, -0.224513263f, -0.231202722f, 0.191681713f, 0.174218088f, -0.166021302f, -0.261603266f, -0.299625456f, 0.315323502f, -0.164057568f, -0.240287513f, -0.0917189196f, -0.23065877f, 0.440015852f, 0.243120521f, -0.0764983892f, -0.131555498f, -0.0459870771f, -0.335271209f, -0.292246014f, -0.0362667665f, 0.298792511f, 0.617236257f, -0.170851216f, -0.190622136f, 0.26699087f },
    { -0.189147189f, -0.30150497f, -0.213353053f, 0.24214305f, -0.0755926147f, 0.321686596f, 0.272754908f, -0.114017494f, -0.25480637f, -0.152141452f, -0.162324309f, 0.18834123f, -0.164954513f, 0.0923408344f, -0.200059235f, -0.0435095541f, 0.211837456f, -0.291480422f, 0.306565255f, 0.427054763f, 0.405058533f, 0.58425355f, -0.381280094f, -0.126260832f, 0.3467049f, 0.433734894f, 0.0484208018f, -0.127096564f, -0.0600458719f, -0.17082803f, -0.0942482352f, 0.34867999f, 0.490523547f, -0.182477117f, -0.174786821f, -0.127716571f, 0.132969007f, -0.098096475f, -0.10542056f, 0.303728282f, 0.14507167f, 0.203628793f, 0.00626020832f, 0.73897773f, 0.0219449289f, 0.479663789f, 0.553982019f, -0.0401562564f, -0.349035561f, 0.219559327f, -0.256839395f, 0.66173166f, 0.54797101f, 0.0334159024f, 0.633767009f, -0.00749401003f, -0.0640358403f, 0.473160446f, 0.507046223f, -0.169940993f, -0.0527081005f, -0.166369185f, -0.149727359f, 0.628992319f, 0.0651148334f, -0.443114519f, 0.49135229f, 0.0490316264f, -0.284620762f, 0.617803276f, -0.249712437f, 0.172817856f, -0.333575219f, -0.0368107781f, -0.141882151f, 0.395013988f, -0.31680879f, 0.623043954f, 0.281615525f, -0.166944951f, 0.572909951f, 0.319883198f, 0.147167489f, 0.191185102f, -0.228078827f, -0.185780376f, 0.0688238069f, -0.299584687f, 0.532470167f, -0.0324919969f, 0.0940507427f, -0.310835302f, -0.0335960723f, 0.471767783f, -0.229198039f, -0.0650665313f, 0.309531748f, 0.188193709f, 0.321868449f, 0.487235069f, 0.38440159f, 0.119001739f, 0.099883005f, 0.149790108f, 0.415077955f, 0.0253212787f, 0.465023607f, -0.147844061f, -0.458803356f, -0.19009234f, 0.0992791727f, 0.123605885f, -0.141571522f, 0.0992265865f, -0.139304116f, 0.228936791f, 0.427880585f, -0.049894549f, -0.353346437f, 0.393032521f, 0.561999321f, 0.236546621f, 0.684941888f, -0.354608119f, 0.20453997f, -0.0118983127f, 0.237668261f, 0.52984798f, -0.273584336f, -0.252666861f, -0.0169516038f, -0.361340225f, -0.288794488f, -0.318917692f, -0.242480308f, -0.0138474181f, -0.264629751f, 0.0555525497f, -0.203942612f, -0.369463652f, 0.270102888f, -0.0475611463f, -0.209532022f, -0.304887563f, -0.16551885f, -0.195785522f, 0.44252494f, -0.209153697f, 0.605110168f, -0.0588446073f, -0.202233955f, -0.0576332025f, 0.145434335f, 0.103748813f, 0.089394249f, -0.124587327f, 0.623222113f, -0.0308698192f, -0.247680023f, 0.737315774f, 0.685372174f, -0.231146947f, -0.132144034f, -0.05560188f, 0.22128813f, 0.678456962f, -0.331930071f, -0.251172096f, -0.164062157f, 0.515067875f, 0.166065484f, 0.478835493f, -0.0737407729f, 0.419679403f, 0.480813414f, -0.022290159f, -0.184859753f, -0.216667771f, 0.628136277f, -0.426150739f, 0.554804683f, 0.562719107f, 0.266970068f, 0.666194379f, 0.734613776f, -0.284966022f, 0.776734591f, 0.570850253f, 0.110400625f, 0.541894436f, 0.362443209f, -0.367393702f, -0.260471076f, -0.0406593904f, -0.178581759f, 0.28893733f, 0.349345356f, -0.0562685169f, -0.0383165814f, -0.102429636f, -0.152469561f, -0.390633911f, -0.0888692066f, -0.287965149f, -0.312181979f, -0.0363227613f, -0.144881055f, -0.141946658f, 0.0351914987f, 0.667922199f, 0.321609169f, 0.618652821f, -0.318308502f, 0.156667933f, -0.410879225f, 0.0686727911f, 0.426734835f, -0.255573779f, -0.0688951835f, -0.149949253f, -0.31237793f, -0.140198708f, -0.112340383f, 0.69917202f, 0.396257937f, 0.759749711f, -0.109742545f, -0.329192758f, 0.532561302f, -0.129112884f, -0.294685423f, -0.182371795f, 0.713221788f, -0.198545203f, -0.203916132f, 0.371810913f, -0.357281864f, 0.143717319f, -0.308470875f, -0.195412412f, 0.212157443f, 0.515601158f, 0.158900484f, -0.126428962f, 0.0221669134f, 0.348769277f, -0.163273975f, -0.0209162813f, 0.402428359f, -0.227421343f, 0.532661259f, -0.420723945f, -0.132058159f, 0.574823737f, 0.350512832f, -0.193649843f },
    { 0.662906885f, 0.710035741f, 0.356192976f, -0.134272575f, -0.203883961f, -0.210640222f, 0.0399770476f, -0.199583352f, -0.0149955451f, -0.174477369f, 0.634225249f, -0.399266869f, 0.708239079f, -0.321545333f, -0.0258540269f, -0.136483625f, 0.0502213836f, -0.364890486f, 0.328372091f, -0.285894752f, 0.358508319f, 0.215604693f, 0.517816365f, -0.16837889f, -0.0363544933f, 0.0137183787f, 0.139542222f, -0.129861683f, 0.148350507f, -0.297366142f, 0.180350885f, -0.321663588f, 0.563008368f, -0.210066319f, -0.192453653f, 0.0155657232f, 0.0372711904f, -0.290400475f, -0.109303243f, 0.405118525f, -0.198574528f, 0.0997713506f, 0.295505524f, -0.0521328151f, 0.132142201f, 0.363396317f, 0.281068653f, 0.113824025f, -0.131417185f, 0.188550413f, -0.201362401f, 0.738012791f, 0.0541958883f, 0.178151354f, -0.360079885f, 0.592126131f, -0.13829568f, -0.199729294f, -0.0459093302f, 0.186898991f, -0.191670403f, -0.145464733f, -0.12187878f, -0.361573994f, 0.121529035f, 0.598519444f, 0.527405739f, -0.0236034058f, -0.2438972f, 0.203195691f, -0.253692359f, 0.587440312f, 0.23390694f, 0.419960916f, -0.0110402498f, -0.0290334951f, -0.308830023f, 0.268379658f, -0.307726324f, -0.167603344f, -0.325169951f, -0.299294651f, 0.264708161f, -0.219947323f, -0.00146399334f, -0.193986088f, 0.567038238f, 0.412634969f, -0.0407301076f, -0.324720472f, -0.252165914f, 0.0736424401f, -0.347259402f, 0.144751117f, -0.290974557f, 0.579855919f, -0.370043814f, -0.0735725164f, 0.480282754f, -0.0246727634f, 0.237839714f, -0.0991437808f, 0.519186676f, 0.644043326f, 0.67419219f, 0.562062263f, -0.146247134f, 0.0403383523f, -0.400324643f, -0.131285891f, 0.452129871f, -0.0685586929f, 0.0685066134f, 0.516083121f, -0.207882628f, -0.171037823f, 0.452895731f, -0.078074567f, -0.343376189f, -0.115440801f, 0.614312828f, -0.254639f, 0.0873474255f, -0.149734586f, 0.0884210914f, -0.442306995f, -0.266639143f, -0.14525561f, -0.275262088f, 0.439506292f, 0.373525918f, 0.080247499f, 0.0668672696f, -0.214473441f, -0.353216916f, 0.717968643f, 0.00592756737f, -0.157860771f, 0.372988522f, -0.109943576f, -0.154089436f, -0.027289601f, 0.520232201f, -0.330221057f, -0.0918179527f, 0.118997276f, 0.206614971f, 0.518546104f, -0.208980322f, 0.672915697f, -0.187199131f, 0.138359651f, -0.0449149422f, -0.109699458f, -0.264961094f, -0.208184287f, -0.292827278f, -0.0673659593f, 0.132840961f, 0.0251600686f, -0.161091596f, 0.242992148f, -0.10676001f, -0.261392474f, -0.274908274f, -0.0852821544f, 0.340794861f, -0.227038577f, 0.660303175f, 0.0776988342f, 0.447924435f, -0.0267834291f, 0.206128836f, 0.0274845697f, -0.334480822f, 0.614009917f, -0.303049266f, 0.194483742f, 0.720827997f, -0.158758655f, 0.358007252f, -0.216340959f, -0.39610076f, 0.0600337759f, 0.304607898f, -0.123095065f, -0.219398648f, 0.173241571f, 0.605659962f, -0.0243420415f, 0.624524415f, 0.160103515f, 0.411296159f, 0.529367328f, 0.398548752f, -0.104614623f, -0.039589189f, 0.404811352f, -0.217289999f, 0.0328808092f, -0.0929103419f, -0.0920065939f, -0.155516073f, -0.0428664051f, -0.306391984f, -0.0878400728f, -0.117043845f, -0.026384009f, 0.201164886f, -0.0639683753f, 0.0199765507f, 0.210789457f, 0.451028615f, 0.313843876f, 0.174330324f, 0.145372167f, -0.158743724f, 0.58828938f, -0.0417320207f, -0.23297967f, -0.0554426312f, 0.218760073f, 0.0709432214f, -0.0791003108f, -0.00195313105f, -0.00417494355f, 0.526528895f, -0.00169834075f, -0.106989317f, 0.0792587698f, 0.176782236f, 0.650612235f, 0.000861639623f, 0.0341215692f, 0.664892852f, -0.0807059258f, 0.677214503f, -0.246103734f, 0.271891922f, -0.143953338f, 0.234559745f, 0.0791443363f, -0.200975835f, 0.596409023f, -0.170115739f, 0.103742257f, -0.207769766f, 0.671393275f, 0.109771021f, 0.438206941f, -0.376039058f, 0.00857400522f, -0.299684972f, -0.363876671f, -0.132019877f, -0.154472664f },
};

static const float sefr_biases[SEFR_SCORE_COUNT] = {
    6.37044477f, 7.77165031f, 8.7350235f, 7.28826571f, 9.60542011f, 11.3513203f, 9.94041824f, 12.0842409f, 8.70261478f, 8.94468403f,
};

#endif /* SEFR_MODEL_DATA_H */
