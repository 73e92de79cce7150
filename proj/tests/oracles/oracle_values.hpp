// Generated by tests/oracles/generate_oracles.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace oracle {

struct BesselRef { double nu, x, value; };
inline constexpr BesselRef kBessel[] = {
    {0, 1e-8, 9.99999999999999975e-1},
    {0, 0.01, 9.999750001562495659729004e-1},
    {0, 0.5, 9.384698072408129042284047e-1},
    {0, 1, 7.651976865579665514497175e-1},
    {0, 2.4, 2.507683297243813015069167e-3},
    {0, 5, -1.77596771314338304347397e-1},
    {0, 11.9, 2.504944169958956372832167e-2},
    {0, 12.1, 6.966677360680738849844284e-2},
    {0, 19.9, 1.728777563926183911292593e-1},
    {0, 20.1, 1.595360679372972084029334e-1},
    {0, 25, 9.626678327595811617350334e-2},
    {0, 40, 7.366890584237289553531736e-3},
    {0, 100, 1.998585030422312242422839e-2},
    {0, 333.3, 3.846665441671843961139801e-2},
    {0, 1000, 2.478668615242017456133073e-2},
    {0, 4321, -1.050530258795492508809047e-2},
    {0, 10000, -7.096160353388801477265164e-3},
    {0.5, 1e-8, 7.978845608028653425818161e-5},
    {0.5, 0.01, 7.97871262793342196547324e-2},
    {0.5, 0.5, 5.409737899345280913309131e-1},
    {0.5, 1, 6.71396707141803090416364e-1},
    {0.5, 2.4, 3.478853347512552693791173e-1},
    {0.5, 5, -3.4216798479816180975967e-1},
    {0.5, 11.9, -1.429721340670807461654895e-1},
    {0.5, 12.1, -1.031381946555598794219098e-1},
    {0.5, 19.9, 1.551869299194026497839535e-1},
    {0.5, 20.1, 1.689138424736379870093195e-1},
    {0.5, 25, -2.112028359965044501778374e-2},
    {0.5, 40, 9.400096238953357755473949e-2},
    {0.5, 100, -4.040213271625212374377295e-2},
    {0.5, 333.3, 1.254664621551893972612635e-2},
    {0.5, 1000, 2.0863266605093827730006e-2},
    {0.5, 4321, -1.17278914467529233837133e-2},
    {0.5, 10000, -2.438450024531391540755898e-3},
    {1, 1e-8, 4.9999999999999999375e-9},
    {1, 0.01, 4.999937500260416124132623e-3},
    {1, 0.5, 2.422684576748738863839546e-1},
    {1, 1, 4.400505857449335159596822e-1},
    {1, 2.4, 5.201852681819310339641796e-1},
    {1, 5, -3.275791375914652220377343e-1},
    {1, 11.9, -2.289832496619240707811468e-1},
    {1, 12.1, -2.157489733769247771826066e-1},
    {1, 19.9, 5.011742480737998301757485e-2},
    {1, 20.1, 8.280100576020954262904594e-2},
    {1, 25, -1.253502495802899046518093e-1},
    {1, 40, 1.260383180375849992056027e-1},
    {1, 100, -7.714535201411215803268549e-2},
    {1, 333.3, -2.068755020681380284950285e-2},
    {1, 1000, 4.728311907089523917576072e-3},
    {1, 4321, -6.081528148032750257531416e-3},
    {1, 10000, 3.647450755529580344117261e-3},
    {1.5, 1e-8, 2.659615202676217826336822e-13},
    {1.5, 0.01, 2.659588606619177172092604e-4},
    {1.5, 0.5, 9.170169962565130263847431e-2},
    {1.5, 1, 2.40297839123427010895843e-1},
    {1.5, 2.4, 5.247337815431689679184467e-1},
    {1.5, 5, -1.696513061447407615169942e-1},
    {1.5, 11.9, -1.938287349582597354124398e-1},
    {1.5, 12.1, -2.134035803597959760183423e-1},
    {1.5, 19.9, -8.1128373869961303307416e-2},
    {1.5, 20.1, -4.76386255529855685161365e-2},
    {1.5, 25, -1.590178953860365798355561e-1},
    {1.5, 40, 8.648867973613376033516736e-2},
    {1.5, 100, -6.920711279589060498355701e-2},
    {1.5, 333.3, -4.182680411225429660882638e-2},
    {1.5, 1000, -1.416870610432220049570414e-2},
    {1.5, 4321, 3.125887080042530420824005e-3},
    {1.5, 10000, 7.596856833191892752902176e-3},
    {2, 1e-8, 1.249999999999999989583333e-17},
    {2, 0.01, 1.249989583365885362413251e-5},
    {2, 0.5, 3.060402345868264130741363e-2},
    {2, 1, 1.149034849319004804696469e-1},
    {2, 2.4, 4.309800401876987152884138e-1},
    {2, 5, 4.656511627775221553230328e-2},
    {2, 11.9, -6.35340214747028529352371e-2},
    {2, 12.1, -1.053277609418362772889563e-1},
    {2, 19.9, -1.67840829276298794846086e-1},
    {2, 20.1, -1.512971618915052141114861e-1},
    {2, 25, -1.062948032423813085456481e-1},
    {2, 40, -1.0649746823580395932516e-3},
    {2, 100, -2.15287573445053655848821e-2},
    {2, 333.3, -3.859079213173082366690058e-2},
    {2, 1000, -2.477722952860599551349558e-2},
    {2, 4321, 1.050248771725460907315989e-2},
    {2, 10000, 7.096889843539907393333988e-3},
    {2.5, 1e-8, 5.319230405352435667871445e-22},
    {2.5, 0.01, 5.319192410955080457236306e-7},
    {2.5, 0.5, 9.236407819379724499932749e-3},
    {2.5, 1, 4.949681022847794227116512e-2},
    {2.5, 2.4, 3.080318921777059405189411e-1},
    {2.5, 5, 2.403772011113173528494735e-1},
    {2.5, 11.9, 9.410774710281358597747943e-2},
    {2.5, 12.1, 5.022821605395757131818858e-2},
    {2.5, 19.9, -1.674173380405023437498956e-1},
    {2.5, 20.1, -1.760240850934865793251607e-1},
    {2.5, 25, 2.038136153326055437517005e-3},
    {2.5, 40, -8.751431140932354552960193e-2},
    {2.5, 100, 3.832591933237540559426624e-2},
    {2.5, 333.3, -1.292312510041771827346052e-2},
    {2.5, 1000, -2.090577272340679433149311e-2},
    {2.5, 4321, 1.173006169929634564505616e-2},
    {2.5, 10000, 2.440729081581349108581769e-3},
    {3.5, 1e-8, 7.598900579074908109020953e-31},
    {3.5, 0.01, 7.59885836305652554867793e-10},
    {3.5, 0.5, 6.623785681459423608531737e-4},
    {3.5, 1, 7.186212018962700459982566e-3},
    {3.5, 2.4, 1.169993271603850748293472e-1},
    {3.5, 5, 4.100285072560581143664677e-1},
    {3.5, 11.9, 2.333698051695259480080194e-1},
    {3.5, 12.1, 2.341590415391172864804037e-1},
    {3.5, 19.9, 3.906371607084011141045729e-2},
    {3.5, 20.1, 3.851539708834678136743282e-3},
    {3.5, 25, 1.594255226167017909230595e-1},
    {3.5, 40, -9.742796866229920352636761e-2},
    {3.5, 100, 7.112340876250937526327032e-2},
    {3.5, 333.3, 4.163293784912171757682127e-2},
    {3.5, 1000, 1.406417724070516652404667e-2},
    {3.5, 4321, -3.112313761714254158795475e-3},
    {3.5, 10000, -7.595636468651102078347885e-3},
    {5, 1e-8, 2.604166666666666655815972e-44},
    {5, 0.01, 2.604155815991598442118018e-14},
    {5, 0.5, 8.053627241357474085978185e-6},
    {5, 1, 2.497577302112344313750655e-4},
    {5, 2.4, 1.624172388982766460413923e-2},
    {5, 5, 2.611405461201700900548055e-1},
    {5, 11.9, -9.453817150838477062221068e-2},
    {5, 12.1, -5.197446976659674577827368e-2},
    {5, 19.9, 1.411640772539042003486617e-1},
    {5, 20.1, 1.597129647480757228292884e-1},
    {5, 25, -6.600799539842299339204816e-2},
    {5, 40, 1.225734659771177869886304e-1},
    {5, 100, -7.419573696451392083413505e-2},
    {5, 333.3, -1.928940405465873265355809e-2},
    {5, 1000, 5.025406945233186074238837e-3},
    {5, 4321, -6.11067931389944048754975e-3},
    {5, 10000, 3.638932738303572651006358e-3},
    {7, 1e-8, 1.550099206349206344362289e-62},
    {7, 0.01, 1.550094362295914363468629e-20},
    {7, 0.5, 1.201586732776302287611055e-8},
    {7, 1, 1.502325817436808212218633e-6},
    {7, 2.4, 5.927397838236138011207049e-4},
    {7, 5, 5.337641015589071543068731e-2},
    {7, 11.9, -1.55206922225789646568311e-1},
    {7, 12.1, -1.840577584828157696173768e-1},
    {7, 19.9, -1.843528678575846700627182e-1},
    {7, 20.1, -1.824792510581846499169597e-1},
    {7, 25, -1.016816821270307417791121e-2},
    {7, 40, -1.080234317357794287000368e-1},
    {7, 100, 7.017269098721271992139269e-2},
    {7, 333.3, 1.786605183165478931900197e-2},
    {7, 1000, -5.321783076443615353823102e-3},
    {7, 4321, 6.139783376258199691215382e-3},
    {7, 10000, -3.630409479651399091488821e-3},
    {9, 1e-8, 5.382288910934744254621879e-81},
    {9, 0.01, 5.382275455227757514095442e-27},
    {9, 0.5, 1.04467675893289798835678e-11},
    {9, 1, 5.249250179911875043030767e-9},
    {9, 2.4, 1.230024444855170211568484e-5},
    {9, 5, 5.520283139475687514280553e-3},
    {9, 11.9, 2.426926439475492077563017e-1},
    {9, 12.1, 2.171682027865603870921202e-1},
    {9, 19.9, 1.376601451717578079158931e-1},
    {9, 20.1, 1.116601893332177314302585e-1},
    {9, 25, 1.08092114873438382485827e-1},
    {9, 40, 7.350010563765249763057359e-2},
    {9, 100, -6.323676140603088711149701e-2},
    {9, 333.3, -1.593222370248413405648405e-2},
    {9, 1000, 5.715759171981731023429532e-3},
    {9, 4321, -6.178515132597494568469075e-3},
    {9, 10000, 3.619037002664599926331474e-3},
    {12.5, 1e-8, 1.00923265611477250935269e-113},
    {12.5, 0.01, 1.009230787167020498094889e-38},
    {12.5, 0.5, 1.734224850718132030465325e-17},
    {12.5, 1, 9.907034158624019031772502e-14},
    {12.5, 2.4, 5.130209476541408918742555e-9},
    {12.5, 5, 3.441194237390799779471149e-5},
    {12.5, 11.9, 1.48668508525173971319368e-1},
    {12.5, 12.1, 1.632011862405755815078263e-1},
    {12.5, 19.9, -1.868100576982122069255221e-1},
    {12.5, 20.1, -1.709732261084091436976303e-1},
    {12.5, 25, 1.500220878152723385299357e-2},
    {12.5, 40, -1.167761797692257219540113e-1},
    {12.5, 100, 1.981880047818177375816039e-2},
    {12.5, 333.3, 2.192141399344262833447515e-2},
    {12.5, 1000, 2.190636379479874470395481e-2},
    {12.5, 4321, -1.178247785888752201926317e-2},
    {12.5, 10000, -2.49763361314565304041469e-3},
    {-0.5, 1e-8, 7.978845608028653159856641e+3},
    {-0.5, 0.01, 7.978446669072760047756031},
    {-0.5, 0.5, 9.90245880243404880023352e-1},
    {-0.5, 1, 4.31098868018376079520521e-1},
    {-0.5, 2.4, -3.797815587301459390104811e-1},
    {-0.5, 5, 1.012177091851083995650602e-1},
    {-0.5, 11.9, 1.818142699106058911968525e-1},
    {-0.5, 12.1, 2.048797626196670603636391e-1},
    {-0.5, 19.9, 8.892671205686595907545386e-2},
    {-0.5, 20.1, 5.604229930789293105391358e-2},
    {-0.5, 25, 1.581730840420505620348448e-1},
    {-0.5, 40, -8.413865567639542089629888e-2},
    {-0.5, 100, 6.880309146872808374611928e-2},
    {-0.5, 333.3, 4.186444781527115511385526e-2},
    {-0.5, 1000, 1.418956937092729432343414e-2},
    {-0.5, 4321, -3.128601241451174929822782e-3},
    {-0.5, 10000, -7.597100678194345892056251e-3},
    {-0.3, 1e-8, 2.382406103445805585575807e+2},
    {-0.3, 0.01, 3.775724363905798870764021},
    {-0.3, 0.5, 1.065326953719177148292914},
    {-0.3, 1, 6.338707263693846701107749e-1},
    {-0.3, 2.4, -2.382062678845852699903775e-1},
    {-0.3, 5, -1.504940931956965106055593e-2},
    {-0.3, 11.9, 1.274091060609105818938932e-1},
    {-0.3, 12.1, 1.618700272726845666454769e-1},
    {-0.3, 19.9, 1.32997516615711247814616e-1},
    {-0.3, 20.1, 1.060550894020055344084806e-1},
    {-0.3, 25, 1.436746012411548952974918e-1},
    {-0.3, 40, -5.074062577747558244959588e-2},
    {-0.3, 100, 5.290270797048744761481072e-2},
    {-0.3, 333.3, 4.369232476359372516610134e-2},
    {-0.3, 1000, 1.99434220768113666869467e-2},
    {-0.3, 4321, -6.599782953805864500825859e-3},
    {-0.3, 10000, -7.978794370778976266144477e-3},
    {0.25, 1e-8, 9.277296085790008254481269e-3},
    {0.25, 0.01, 2.933679941439781604793896e-1},
    {0.25, 0.5, 7.416565701571460628219909e-1},
    {0.25, 1, 7.522313333407900569768001e-1},
    {0.25, 2.4, 1.923325346123359150403246e-1},
    {0.25, 5, -2.809720657613760054076784e-1},
    {0.25, 11.9, -6.423685371388431907864812e-2},
    {0.25, 12.1, -1.864300205100525849182192e-2},
    {0.25, 19.9, 1.772748102791425968090354e-1},
    {0.25, 20.1, 1.775399802195324197174982e-1},
    {0.25, 25, 4.043647671267371902428343e-2},
    {0.25, 40, 5.491175234259973171658703e-2},
    {0.25, 100, -1.107092754464982668967331e-2},
    {0.25, 333.3, 2.76028788632648928421148e-2},
    {0.25, 1000, 2.470477633335720458562155e-2},
    {0.25, 4321, -1.203245735823775915881483e-2},
    {0.25, 10000, -5.160061576643658509462161e-3},
};

inline constexpr double kFirstZeroJ0 = 2.404825557695772768621632;

struct GammaRef { double re, im, gre, gim; };
inline constexpr GammaRef kGamma[] = {
    {0.75, 0, 1.225416702465177645129098, 0.0},
    {0.25, 0, 3.625609908221908311930685, 0.0},
    {1.75, 0, 9.190625268488832338468237e-1, 0.0},
    {-0.75, 0, -4.834146544295877749240914, 0.0},
    {-2.75, 0, -1.004497983230312259582527, 0.0},
    {3.5, 0, 3.323350970447842551184064, 0.0},
    {-19.7, 0, 3.941385000966105976846043e-18, 0.0},
    {17.3, 0, 4.864762854615686781781818e+13, 0.0},
    {0.5, 3, 2.14456705524306460595528e-2, 6.865364837261677914238494e-3},
    {-4.2, 1.5, 2.166405045907659613203404e-3, 3.261473188965652437567006e-4},
    {2, -7, -6.488334051580965076092187e-4, -4.448653393326747023650511e-4},
    {0.1, 0.1, 4.520080204891074871270436, -4.91731306914246330110488},
    {-0.999, 0, -1.00042419668127674285784e+3, 0.0},
    {45, 10, 8.226994800869217052511947e+53, 2.900008851360302427333773e+53},
    {-30.5, 0, -2.135797443694174559898292e-33, 0.0},
};

struct HankelRef { double coeff, lambda, rho, nu, r, value; };
inline constexpr HankelRef kHankel[] = {
    {1, 0.5, 6, 0, 10, 1.767020968545175980136856e-2},
    {1, 0.5, 6, 0, 100, 4.785277360355593695489161e-4},
    {1, -0.9, 0.1, 0, 3, 8.261080438912612748032215},
    {1, -0.9, 0.1, 0, 40, 7.092013097258854075133057},
    {1, 0, 0.5, 0.5, 7, 1.248487952409463809848521e-1},
    {1, 2.5, 3, 1, 60, -4.411433052803410060014943e-6},
    {1, -1.4, 0.5, 0.5, 25, 3.015746780037018320970135e+1},
    {1, 1, 1, 0, 200, -2.71522690911891113553351e-4},
    {2, 0.3, 1.7, 1.5, 15, 6.175034432809059338549698e-2},
};

// 2^alpha Gamma(alpha + 1) r^-(alpha + 1) J_(nu + alpha + 1)(r)
struct SonineRef { double nu, alpha, r, value; };
inline constexpr SonineRef kSonine[] = {
    {0, 0, 5, -6.551582751829304440754686e-2},
    {0, 0, 20, 3.341656208792502278949649e-3},
    {0, 0, 50, -1.950236562503502753229179e-3},
    {0, 0, 100, -7.714535201411215803268549e-4},
    {0, 0, 500, 2.094522694074458568893419e-5},
    {0, 1, 5, 3.725209302220177242584263e-3},
    {0, 1, 20, -8.017067596149907508471062e-4},
    {0, 1, 50, -4.777024063540705640896707e-5},
    {0, 1, 100, -4.30575146890107311697642e-6},
    {0, 1, 500, 2.731395786769078994920234e-7},
    {0, 2.5, 5, 2.75784741797155212525903e-2},
    {0, 2.5, 20, 1.130692327708273051163044e-5},
    {0, 2.5, 50, 2.377511351479650185471906e-6},
    {0, 2.5, 100, 1.337099605441831934157411e-7},
    {0, 2.5, 500, -2.107639288665165596808389e-10},
    {0.5, 0, 5, -3.393026122894815230339884e-2},
    {0.5, 0, 20, -3.233143329615517750230189e-3},
    {0.5, 0, 50, -2.189537459766360707761629e-3},
    {0.5, 0, 100, -6.920711279589060498355701e-4},
    {0.5, 0, 500, 6.300910711422960986971419e-5},
    {0.5, 1, 5, 1.923017608890538822795788e-2},
    {0.5, 1, 20, -8.629009692193821208072672e-4},
    {0.5, 1, 50, 1.842977560770042435579571e-5},
    {0.5, 1, 100, 7.665183866475081118853248e-6},
    {0.5, 1, 500, 1.350422919678853240532002e-7},
    {0.5, 2.5, 5, 2.631424732729621622716389e-2},
    {0.5, 2.5, 20, 6.866338451376805039359983e-5},
    {0.5, 2.5, 50, 1.506748355817353939866129e-6},
    {0.5, 2.5, 100, 4.907817007034797214862195e-8},
    {0.5, 2.5, 500, -2.304649595468825532864197e-10},
    {1.5, 0, 5, 4.807544022226347056989471e-2},
    {1.5, 0, 20, -8.629009692193821208072672e-3},
    {1.5, 0, 50, 4.607443901925106088948927e-4},
    {1.5, 0, 100, 3.832591933237540559426624e-4},
    {1.5, 0, 500, 3.376057299197133101330004e-5},
    {1.5, 1, 5, 3.280228058048464914931742e-2},
    {1.5, 1, 20, 1.075890906567062448212021e-4},
    {1.5, 1, 50, 8.942447595142447074604472e-5},
    {1.5, 1, 100, 1.422468175250187505265406e-5},
    {1.5, 1, 500, -2.506860055372395862383248e-7},
    {1.5, 2.5, 5, 1.756428560698693863645781e-2},
    {1.5, 2.5, 20, 7.943486453683468729347786e-5},
    {1.5, 2.5, 50, -1.731338189933372621944308e-6},
    {1.5, 2.5, 100, -1.394858490992513069483676e-7},
    {1.5, 2.5, 500, 6.491411453704903675986406e-11},
};

inline constexpr double kBoundaryAmplitudeSonine = 1.595769121605730711759784;
inline constexpr double kOriginAmplitudeHalf = 4.7798879748612499536382e-1;
inline constexpr double kBallFourierR2 = 2.73568490253296710157256;

}  // namespace oracle
