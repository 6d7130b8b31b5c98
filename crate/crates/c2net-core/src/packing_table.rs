// Generated by tools/gen_packing_table.py; do not edit by hand.
//
// For each count N (1..=50): the enclosing-to-inner radius ratio the
// embedded layout achieves, and the circle centers scaled to an
// enclosing circle of radius 1.

pub(crate) const MAX_TABLE_COUNT: usize = 50;

pub(crate) static PACKING_RATIOS: [f64; 50] = [
    1.000000000000000e+00, // N=1
    2.000000000002001e+00, // N=2
    2.154700538381411e+00, // N=3
    2.414213562375522e+00, // N=4
    2.701301616706969e+00, // N=5
    3.000000000003010e+00, // N=6
    3.000000000003011e+00, // N=7
    3.304764870965864e+00, // N=8
    3.613125929756371e+00, // N=9
    3.813025631401941e+00, // N=10
    3.923804400170894e+00, // N=11
    4.029601930120219e+00, // N=12
    4.236067977512281e+00, // N=13
    4.328428554866936e+00, // N=14
    4.527238592997191e+00, // N=15
    4.615425594877815e+00, // N=16
    4.792323227585258e+00, // N=17
    4.863703305161144e+00, // N=18
    4.863703305161237e+00, // N=19
    5.122320736996844e+00, // N=20
    5.260064432844239e+00, // N=21
    5.449393480674305e+00, // N=22
    5.547398005853449e+00, // N=23
    5.656447495630008e+00, // N=24
    5.760886675552363e+00, // N=25
    5.828176536948802e+00, // N=26
    5.906701152594984e+00, // N=27
    6.014938097377534e+00, // N=28
    6.138597903984416e+00, // N=29
    6.197741070885431e+00, // N=30
    6.291502622136006e+00, // N=31
    6.456501811106444e+00, // N=32
    6.486703123566930e+00, // N=33
    6.625645508876751e+00, // N=34
    6.697677209062381e+00, // N=35
    6.748973929041944e+00, // N=36
    6.758770483151360e+00, // N=37
    6.989750673560636e+00, // N=38
    7.062365018091501e+00, // N=39
    7.123846435950304e+00, // N=40
    7.284550599280517e+00, // N=41
    7.349711834574729e+00, // N=42
    7.419944856348732e+00, // N=43
    7.518362973199102e+00, // N=44
    7.577318432729111e+00, // N=45
    7.671663899821703e+00, // N=46
    7.735162364020209e+00, // N=47
    7.836356774711756e+00, // N=48
    7.894349484996101e+00, // N=49
    7.975763004918441e+00, // N=50
];

pub(crate) static PACKING_CENTERS: [&[(f64, f64)]; 50] = [
    &[(0.000000000000000e+00, 0.000000000000000e+00)], // N=1
    &[(4.999999999999998e-01, 6.014460944266894e-17), (-4.999999999999996e-01, 2.317639162425665e-09)], // N=2
    &[(-2.679491924311224e-01, -4.641016151377552e-01), (5.358983848622465e-01, 4.558366825920284e-17), (-2.679491924311221e-01, 4.641016151377551e-01)], // N=3
    &[(-5.857864376269053e-01, -8.162855281882899e-16), (8.468868789173115e-16, -5.857864376269019e-01), (5.857864376269071e-01, -1.020538052295544e-20), (-2.144862015146279e-17, 5.857864376269010e-01)], // N=4
    &[(-5.095254494944416e-01, -3.701919081587413e-01), (1.946214035737859e-01, -5.989830897610617e-01), (6.298080918412755e-01, -1.622653135173115e-17), (1.946214035738008e-01, 5.989830897610531e-01), (-5.095254494944318e-01, 3.701919081587543e-01)], // N=5
    &[(4.640770350420470e-16, 1.636760642721691e-17), (-6.666660206450974e-01, -9.280957253048751e-04), (3.333333333333341e-01, -5.773502691896264e-01), (6.666666666666677e-01, -1.137091400996741e-16), (3.328500726604923e-01, 5.776290103295968e-01), (-3.341367647978062e-01, 5.768856618558825e-01)], // N=6
    &[(5.567082465660989e-16, -5.434293296011041e-16), (-3.333333333333322e-01, -5.773502691896246e-01), (3.333333333333329e-01, -5.773502691896241e-01), (6.666666666666652e-01, 5.577472169381224e-17), (3.333333333333325e-01, 5.773502691896241e-01), (-3.333333333333324e-01, 5.773502691896243e-01), (-6.666666666666650e-01, 1.657935171664630e-16)], // N=7
    &[(1.388010044571710e-03, 3.768475579176387e-04), (-6.283416453672092e-01, -3.025933883486214e-01), (-1.551875705719617e-01, -6.799211718390901e-01), (4.348259101135037e-01, -5.452544450704000e-01), (6.974066116513892e-01, -4.829629776565768e-17), (4.348259101134947e-01, 5.452544450704099e-01), (-1.551875705719785e-01, 6.799211718390873e-01), (-6.283416453672130e-01, 3.025933883486031e-01)], // N=8
    &[(1.176793309285339e-02, -1.337143702128271e-02), (-5.114017891839764e-01, -5.114017891839753e-01), (-5.324658554899210e-16, -7.232313460858451e-01), (5.114017891839755e-01, -5.114017891839762e-01), (7.232313460858452e-01, 7.098118125582445e-18), (5.114017891839763e-01, 5.114017891839753e-01), (4.465763929394483e-16, 7.232313460858445e-01), (-5.114017891839754e-01, 5.114017891839762e-01), (-7.232313460858449e-01, 4.145503774618680e-16)], // N=9
    &[(-5.739235470298724e-02, 2.281999107486878e-01), (7.054007681411291e-02, -2.804770655689507e-01), (-6.499652898569842e-01, -3.490086201201595e-01), (-2.537605025108463e-01, -6.927246944511899e-01), (5.512806886289194e-01, -4.902565627116844e-01), (7.377410758098344e-01, -1.629742109681144e-17), (5.512806886289194e-01, 4.902565627116844e-01), (8.615339779411060e-02, 7.326933103185679e-01), (-4.225235785235277e-01, 6.047608788014678e-01), (-7.176190893979416e-01, 1.711278395490359e-01)], // N=10
    &[(1.293931231439242e-01, -2.241154634351227e-01), (-1.982417659243597e-01, 1.663445926712674e-01), (3.037240063609535e-01, 2.548547017172907e-01), (-7.002075382095518e-01, -2.548547017175555e-01), (-3.725726491410147e-01, -6.453147578237051e-01), (1.293931231443849e-01, -7.338248668694406e-01), (5.708144150657897e-01, -4.789701651524197e-01), (7.451452982828538e-01, -2.246670163543215e-17), (1.293931231435836e-01, 7.338248668695835e-01), (-3.725726491417202e-01, 6.453147578232994e-01), (-7.002075382098406e-01, 2.548547017167654e-01)], // N=11
    &[(1.432772465375952e-01, -2.481634705716862e-01), (1.432772465375953e-01, 2.481634705716870e-01), (-2.865544930751903e-01, 3.591763116146241e-16), (-6.997468573532778e-01, -2.749772765284839e-01), (-3.759182647141563e-01, -6.511095339780462e-01), (1.117361217395143e-01, -7.434871929505062e-01), (5.880107356137639e-01, -4.685099164220232e-01), (7.518365294283135e-01, -1.164467025405681e-16), (5.880107356137642e-01, 4.685099164220226e-01), (1.117361217395130e-01, 7.434871929505064e-01), (-3.759182647141576e-01, 6.511095339780455e-01), (-6.997468573532787e-01, 2.749772765284823e-01)], // N=12
    &[(-9.016994374872189e-02, -2.775145514254158e-01), (2.360679775049062e-01, 1.715134251467745e-01), (-2.360679774962408e-01, 1.715134251577327e-01), (3.819660112547849e-01, -2.775145514322416e-01), (-6.180339887535317e-01, -4.490279765751705e-01), (-2.360679775062413e-01, -7.265425280036359e-01), (2.360679774926560e-01, -7.265425280080624e-01), (7.639320225006703e-01, -1.695384382974328e-16), (6.180339887507904e-01, 4.490279765790632e-01), (2.360679775016585e-01, 7.265425280051726e-01), (-2.360679774972229e-01, 7.265425280065930e-01), (-6.180339887479608e-01, 4.490279765828608e-01), (-7.639320225005590e-01, 4.748552819359141e-12)], // N=13
    &[(-2.545973847881033e-01, -1.743204915369832e-01), (2.661915704843638e-01, 1.560432949975864e-01), (-1.785300307041198e-01, 2.814366221868995e-01), (1.901242164003879e-01, -2.997138187262917e-01), (-6.672189989523010e-01, -3.822728721239191e-01), (-3.276758520040579e-01, -6.956595987537297e-01), (1.301785197170432e-01, -7.578702358115559e-01), (6.301465668616336e-01, -4.407142448313680e-01), (7.689692720289864e-01, 1.123901202735275e-16), (6.301465668616411e-01, 4.407142448313539e-01), (2.638020237076294e-01, 7.223034221243407e-01), (-1.977913463938522e-01, 7.430964436844462e-01), (-5.879698218723513e-01, 4.955857442382276e-01), (-7.658548697769788e-01, 6.913797627686774e-02)], // N=14
    &[(2.985242584641343e-01, -1.611737296797650e-01), (-1.130993506325822e-02, 3.390660546255100e-01), (-1.104431415160893e-01, -3.282268687258963e-01), (-3.430589233524535e-01, 4.734067986211302e-02), (4.237696558033431e-01, 2.624707863440986e-01), (-7.514894454343679e-01, -2.056294864291694e-01), (-5.188736635980071e-01, -5.811970350171789e-01), (-1.194364117338295e-01, -7.699057187997275e-01), (3.184004722144330e-01, -7.110843913221586e-01), (6.538694031160105e-01, -4.236445160238616e-01), (7.791148004552230e-01, -6.212781333727062e-17), (3.470821420989919e-01, 6.975341274262905e-01), (-8.799744876760637e-02, 7.741293957077020e-01), (-4.947852514938781e-01, 6.018367114031166e-01), (-7.424961752166336e-01, 2.360493636446587e-01)], // N=15
    &[(-2.461498918272678e-01, -2.533009525668357e-01), (1.845279971185527e-01, -3.011653368122843e-01), (3.605075059907657e-01, 9.482160206716801e-02), (-3.308912557138509e-01, 1.716618040985757e-01), (4.335449298340438e-02, 3.900984376746648e-01), (-7.387207599872423e-01, -2.605873437861719e-01), (-4.871620926759978e-01, -6.134225464043557e-01), (-8.652505994191755e-02, -7.785419314203371e-01), (3.405898426801892e-01, -7.054166740592008e-01), (6.634795237800779e-01, -4.164241185404879e-01), (7.833352570755777e-01, -1.851475163257518e-16), (6.634795237800782e-01, 4.164241185404877e-01), (3.405898426801896e-01, 7.054166740592012e-01), (-1.773957122976002e-01, 7.629841978940902e-01), (-5.558583516459759e-01, 5.519380562011281e-01), (-7.642206163637524e-01, 1.719912047235777e-01)], // N=16
    &[(9.639920622562881e-03, 2.958578485954267e-02), (-3.960709062489661e-01, -6.822266676260567e-02), (2.798535780060958e-01, -2.884587837356735e-01), (-1.258572488654340e-01, -3.862672353578227e-01), (4.059917231199879e-01, 1.602495399967084e-01), (-2.336556173830583e-01, 3.686654944206694e-01), (1.626961851143681e-01, 4.993292495578370e-01), (-7.168266783862981e-01, -3.352123723508308e-01), (-4.466130210027652e-01, -6.532569409460482e-01), (-2.395873229512414e-02, -7.909701641466736e-01), (3.817520945764068e-01, -6.931617125245247e-01), (6.812858536083617e-01, -4.025635441722611e-01), (7.913329396805154e-01, -2.900555550076796e-17), (5.779955965049648e-01, 5.404895113175416e-01), (-1.486378474370018e-01, 7.772481017877749e-01), (-6.394356188491510e-01, 4.661865621941593e-01), (-7.876686599059634e-01, 7.606512752470519e-02)], // N=17
    &[(-2.430331878016738e-16, -2.041765429675758e-16), (-2.907688799343112e-01, -2.907688799343109e-01), (1.064287966859054e-01, -3.971976766202160e-01), (3.971976766202157e-01, -1.064287966859047e-01), (1.064287966859057e-01, 3.971976766202155e-01), (-2.907688799343102e-01, 2.907688799343112e-01), (-5.815377598686210e-01, 7.413381669798481e-16), (-6.879665565545273e-01, -3.971976766202147e-01), (-3.971976766202156e-01, -6.879665565545268e-01), (1.146120618050976e-16, -7.943953532404319e-01), (3.971976766202159e-01, -6.879665565545265e-01), (6.879665565545264e-01, -3.971976766202159e-01), (7.943953532404320e-01, 4.373242393219656e-17), (6.879665565545267e-01, 3.971976766202158e-01), (3.971976766202159e-01, 6.879665565545265e-01), (3.011555822929011e-16, 7.943953532404318e-01), (-3.971976766202154e-01, 6.879665565545269e-01), (-6.879665565545264e-01, 3.971976766202164e-01)], // N=18
    &[(-4.415513249060171e-15, -3.679726065617407e-15), (-2.907688799343170e-01, -2.907688799343094e-01), (1.064287966858945e-01, -3.971976766202218e-01), (3.971976766202136e-01, -1.064287966859012e-01), (2.907688799343124e-01, 2.907688799343132e-01), (-1.064287966859037e-01, 3.971976766202172e-01), (-3.971976766202164e-01, 1.064287966859102e-01), (-6.879665565545338e-01, -3.971976766202053e-01), (-3.971976766202295e-01, -6.879665565545204e-01), (-1.729667110148494e-14, -7.943953532404339e-01), (3.971976766201993e-01, -6.879665565545381e-01), (6.879665565545183e-01, -3.971976766202357e-01), (7.943953532404361e-01, 7.276248734932722e-17), (6.879665565545292e-01, 3.971976766202160e-01), (3.971976766202194e-01, 6.879665565545261e-01), (5.753854875131973e-15, 7.943953532404326e-01), (-3.971976766202093e-01, 6.879665565545313e-01), (-6.879665565545225e-01, 3.971976766202241e-01), (-7.943953532404324e-01, 1.075781600644056e-14)], // N=19
    &[(5.068142766778849e-04, 1.012906933641884e-03), (-2.168385436636890e-01, -3.642825147785796e-01), (-3.627760763520637e-01, 2.193495452883243e-01), (1.726382151493544e-01, -3.918054553461088e-01), (-3.209184679600176e-02, 4.269491556827015e-01), (4.259902767574327e-01, -9.471558545497943e-02), (3.312746913024105e-01, 2.840701267688404e-01), (-5.313068346459701e-01, -1.328535799418136e-01), (-6.199983964336567e-01, -5.130949043407491e-01), (-3.055301054513739e-01, -7.445238391775123e-01), (8.085500016796522e-02, -8.007039786266751e-01), (4.482081545791951e-01, -6.684114321355242e-01), (7.100604035262357e-01, -3.787857122238220e-01), (8.047759889812514e-01, -3.176996754195169e-17), (7.100604035262357e-01, 3.787857122238220e-01), (4.482081545791950e-01, 6.684114321355245e-01), (8.085500016796368e-02, 8.007039786266756e-01), (-3.055301054513770e-01, 7.445238391775110e-01), (-6.199983964336596e-01, 5.130949043407462e-01), (-7.885291547275683e-01, 1.608917791106068e-01)], // N=20
    &[(-2.087944419060882e-02, 4.991494940101872e-02), (-4.242868982494144e-01, -6.847778368409375e-02), (-3.125766732591188e-01, 2.949650864401696e-01), (-2.047772733864178e-01, -3.789377952863145e-01), (4.341317879938696e-02, 4.285357398147329e-01), (1.750643069546085e-01, -3.959750502170886e-01), (3.672487430488658e-01, 2.292860935446174e-01), (4.565017309543403e-01, -1.403134172254724e-01), (-7.974199720436472e-01, -1.415640577197315e-01), (-6.449370584835433e-01, -4.898726210422067e-01), (-3.503047588938816e-01, -7.302092646279328e-01), (2.153756568191315e-02, -8.096018327033752e-01), (3.886328351800326e-01, -7.105515559564246e-01), (6.700702591797646e-01, -4.548899229648087e-01), (8.098882603496405e-01, -1.854486048278066e-17), (7.206352724441656e-01, 3.695995107700900e-01), (4.725483949649609e-01, 6.577362759253942e-01), (1.203079984253590e-01, 8.009026031716030e-01), (-2.584492618696324e-01, 7.675434667113055e-01), (-5.802421976444224e-01, 5.650114922060768e-01), (-7.741450221926442e-01, 2.379463781327993e-01)], // N=21
    &[(-9.446562058620799e-02, 3.757953653911171e-03), (4.040713507417643e-01, 1.968721164552638e-01), (4.186659461500938e-01, -1.698509067396374e-01), (1.242711877771679e-01, 4.343813726145261e-01), (1.613453647614246e-01, -4.315470976751160e-01), (-2.404048947646830e-01, 3.930276209313975e-01), (-2.056209385669102e-01, -4.256725612782811e-01), (-4.619446119484255e-01, 1.004204924015406e-01), (-5.329414678536796e-01, -2.596603657510553e-01), (-8.160749639457383e-01, -2.613477540381223e-02), (-5.235383908567407e-01, -6.265532112786429e-01), (-1.962178615699711e-01, -7.925654068058691e-01), (1.707484417583633e-01, -7.984399432027042e-01), (5.032150614914437e-01, -6.429898717340806e-01), (7.340071931704012e-01, -3.576238437780115e-01), (8.164933393876963e-01, 9.738837044665324e-18), (7.340071931703961e-01, 3.576238437780138e-01), (5.032150614914433e-01, 6.429898717340877e-01), (1.707484417583598e-01, 7.984399432027056e-01), (-1.962178615699746e-01, 7.925654068058693e-01), (-5.235383908567427e-01, 6.265532112786407e-01), (-7.450781080404847e-01, 3.339460827487832e-01)], // N=22
    &[(1.192798947180030e-03, -1.269140010314429e-01), (-6.672768527700770e-02, 2.271597856137374e-01), (-4.237582944836030e-01, 1.770540708092166e-01), (4.174931089755743e-01, 1.914588407831824e-01), (4.297268567269366e-01, -1.688629237307874e-01), (-4.239851475693682e-01, -1.834752443708146e-01), (1.872858196828057e-01, -4.357032919726841e-01), (-1.731800610567062e-01, -4.424699299260999e-01), (1.949813963169471e-01, 4.751311452054319e-01), (-1.840243518041509e-01, 5.680746292156620e-01), (-8.191577851964612e-01, -3.076517581812074e-02), (-7.267314042834414e-01, -3.792458821388955e-01), (-4.937300580255427e-01, -6.543673302459299e-01), (-1.652242580071791e-01, -8.029115254229875e-01), (1.952416227323330e-01, -7.961448874695716e-01), (5.179410271812855e-01, -6.353763179828834e-01), (7.404527398399123e-01, -3.517040135606339e-01), (8.197353067247329e-01, -3.886343321254257e-17), (7.404527398399119e-01, 3.517040135606349e-01), (5.179410271812847e-01, 6.353763179828842e-01), (7.768472978980352e-02, 8.160459888073570e-01), (-5.414221946775938e-01, 6.154900325769616e-01), (-7.531307449593092e-01, 3.236665785775969e-01)], // N=23
    &[(1.075205948864815e-01, -1.092361244136980e-01), (-8.604233903737489e-02, 1.866546809541219e-01), (-2.455098262702162e-01, -1.289211397388957e-01), (4.198637998394352e-01, 2.118438260147692e-01), (1.546413650679236e-01, 4.456707666873687e-01), (-4.394702029338899e-01, 1.762741517533782e-01), (-1.193763289791581e-01, -4.592366237107710e-01), (4.598042534041054e-01, -1.394718984546560e-01), (2.336540921775235e-01, -4.395516083855461e-01), (-2.713888147193825e-01, 4.877604132852771e-01), (-5.320242329443758e-01, -3.361106010022060e-01), (-8.140017553701567e-01, -1.227877120825415e-01), (-4.604779102056564e-01, -6.823750978727113e-01), (-1.317534342765042e-01, -8.125987401790062e-01), (2.212769868801676e-01, -7.929137248537168e-01), (5.334861091253233e-01, -6.269515542324491e-01), (7.472774237493960e-01, -3.453290198327228e-01), (8.232105927307843e-01, 6.521705566550095e-17), (7.472774237492584e-01, 3.453290198330249e-01), (5.334861091250725e-01, 6.269515542326661e-01), (2.212769868798476e-01, 7.929137248538067e-01), (-1.317534342768330e-01, 8.125987401789543e-01), (-6.210325531992065e-01, 5.403649210034205e-01), (-7.904262902921408e-01, 2.300042599587279e-01)], // N=24
    &[(-1.815602318372044e-01, -3.080815145687563e-03), (1.488501339443434e-01, -1.096413712969225e-01), (7.592909972193580e-02, 2.297826772192241e-01), (-3.252618194072061e-01, 3.523194517129422e-01), (-3.874744427817191e-01, -2.828102765347872e-01), (-9.707692914825464e-02, -4.730612844655151e-01), (4.230842098977670e-01, 2.328634923649059e-01), (2.488543764936748e-01, -4.420948468619876e-01), (4.960052441201770e-01, -1.065605561512396e-01), (-5.251441677158443e-01, 4.668102715642418e-02), (-1.889944370241009e-02, 5.637493062335204e-01), (-8.132260160202064e-01, -1.470585160986877e-01), (-6.810691717651175e-01, -4.680892474308951e-01), (-4.287203374579083e-01, -7.065137171628180e-01), (-1.007128877396742e-01, -8.202558591880835e-01), (2.450679143826260e-01, -7.892429775610269e-01), (5.476002454997981e-01, -6.189480845901429e-01), (7.534945756793096e-01, -3.394240485161660e-01), (8.264156099017312e-01, -4.829847029693222e-17), (7.534945756793191e-01, 3.394240485161481e-01), (5.476002454998109e-01, 6.189480845901307e-01), (2.450679143826409e-01, 7.892429775610228e-01), (-2.973763003154186e-01, 7.710577775367806e-01), (-5.878240632124724e-01, 5.808834917585667e-01), (-7.745353087526716e-01, 2.881975291092030e-01)], // N=25
    &[(4.888769544018007e-02, 1.717101347528979e-01), (9.160904793841583e-02, -1.687807135869193e-01), (-2.246253527290982e-01, -3.553306596451256e-02), (3.467674317867640e-01, 3.420826514231018e-01), (-2.740330972122002e-01, 4.027083979568042e-01), (4.864564983956852e-01, 2.864031791919344e-02), (-2.812431481636941e-01, -4.020275335065233e-01), (4.065382890937158e-01, -3.050844363086188e-01), (5.655135909152059e-02, -5.101457531196185e-01), (5.028063607038944e-02, 5.148678120367487e-01), (-5.245528964869205e-01, 1.681898231406480e-01), (-5.383020186731522e-01, -1.746951333703582e-01), (-6.654302300989299e-01, -4.934388385978167e-01), (-4.083719368139973e-01, -7.207715586710270e-01), (-8.124082300644866e-02, -8.244265929987418e-01), (2.598304593005661e-01, -7.866177031989131e-01), (5.563172550169410e-01, -6.138325425852670e-01), (7.573451916633988e-01, -3.357194352887665e-01), (8.284197478128335e-01, -2.063524021537297e-17), (7.573451916633985e-01, 3.357194352887660e-01), (5.563172550169410e-01, 6.138325425852672e-01), (2.598304593005661e-01, 7.866177031989141e-01), (-1.027346585204659e-01, 8.220248588120442e-01), (-4.270483918030555e-01, 7.098654447320998e-01), (-6.780845988512280e-01, 4.758997324721320e-01), (-8.283745404940902e-01, 8.654433978157872e-03)], // N=26
    &[(1.202025455304303e-01, 1.387469436321885e-01), (4.715634888597305e-02, -1.918784941914129e-01), (-2.026505810843897e-01, 3.669408666432152e-02), (-3.906869539909240e-01, -2.992673288685120e-01), (4.624305689660968e-01, -1.730915660412732e-01), (-6.413144476336613e-02, 4.900400238968678e-01), (-3.646455191654931e-01, 3.340265050387198e-01), (4.665842146458932e-01, 1.654814308262200e-01), (-1.115788127614303e-01, -4.909638924258329e-01), (2.710272014328837e-01, 4.418984736500584e-01), (2.668735557530869e-01, -4.495086088651110e-01), (-5.397397338020048e-01, 4.759307811332685e-03), (-8.047556549911512e-01, -2.059905166169148e-01), (-6.557028751800701e-01, -5.100171532967590e-01), (-3.977099716840672e-01, -7.293082582827364e-01), (-7.364053391316096e-02, -8.274302562399591e-01), (2.626637272455803e-01, -7.880809118141355e-01), (5.661363932282261e-01, -6.079089910824448e-01), (7.616934064412357e-01, -3.314919482586068e-01), (8.307007627156369e-01, -1.516550001312311e-16), (7.616934064412356e-01, 3.314919482586065e-01), (5.661363932282257e-01, 6.079089910824447e-01), (2.765200567525555e-01, 7.833265062474929e-01), (-5.903801694016210e-02, 8.286001869008440e-01), (-3.847873661159901e-01, 7.362081499507183e-01), (-6.466071751848612e-01, 5.215006406283643e-01), (-8.009980430265772e-01, 2.201497041649933e-01)], // N=27
    &[(1.731525358896074e-01, -7.324963821043227e-02), (-1.731525358896072e-01, 7.324963821043209e-02), (-1.068495240435606e-01, -2.525782583879732e-01), (1.068495240435607e-01, 2.525782583879728e-01), (3.620109268826334e-01, -3.479591221355314e-01), (-3.620109268826350e-01, 3.479591221355304e-01), (5.046681185939839e-01, -4.761126841483467e-02), (-5.046681185939834e-01, 4.761126841483306e-02), (-4.383651067479370e-01, -2.782166281835722e-01), (4.383651067479373e-01, 2.782166281835705e-01), (8.154552729224088e-02, -5.265622218124387e-01), (-8.154552729224170e-02, 5.265622218124374e-01), (-2.499290709307935e-01, -5.527251405042833e-01), (2.499290709307923e-01, 5.527251405042838e-01), (-5.749253720453301e-02, -8.301636563896984e-01), (5.677110420899844e-02, 8.317857154633118e-01), (-7.674442381153469e-01, -3.258278965984038e-01), (-5.790805792007840e-01, -5.998334432245921e-01), (2.986151796103902e-01, -7.784365429015008e-01), (5.790805792007829e-01, -5.998334432245932e-01), (7.674442381153466e-01, -3.258278965984050e-01), (8.337472499613933e-01, -2.575333805982226e-17), (7.674442381153465e-01, 3.258278965984053e-01), (5.790805792007832e-01, 5.998334432245932e-01), (-2.986151796103887e-01, 7.784365429015012e-01), (-5.790805792007819e-01, 5.998334432245942e-01), (-7.674442381153460e-01, 3.258278965984067e-01), (-8.337472499613932e-01, 1.464691110174915e-15)], // N=28
    &[(2.058329498026592e-01, 6.070331514180751e-02), (-8.370951785773446e-02, 2.100872339942768e-01), (-2.155034473001731e-01, -8.787376337402411e-02), (7.403902036022023e-02, -2.372576822264930e-01), (-3.255134410313894e-01, -3.945465483906432e-01), (-4.808043578265236e-01, 1.751428335101478e-01), (4.652274657417351e-01, -2.146986008473847e-01), (3.749021085568986e-02, 5.128984651309960e-01), (3.382812138689656e-01, 3.876972441684746e-01), (5.286313951095176e-01, 1.048797737828744e-01), (-3.048497805037486e-01, 4.493514812763211e-01), (-3.597097337099515e-02, -5.439304672431113e-01), (-5.360948666394962e-01, -1.459387066409344e-01), (2.846204459683317e-01, -4.858655239762249e-01), (-8.368402241866796e-01, -1.620259500877964e-02), (1.610477807037396e-01, -8.214518303368628e-01), (-7.318267238913544e-01, -4.063987531880573e-01), (-5.212452982832473e-01, -6.550065949377668e-01), (-2.317028306228528e-01, -8.043905137902347e-01), (5.930854015821669e-01, -5.907452977590933e-01), (7.736924213555696e-01, -3.195783746302554e-01), (8.370963507233565e-01, 1.611281441568271e-17), (7.736924213555693e-01, 3.195783746302557e-01), (5.930854015821669e-01, 5.907452977590933e-01), (3.226346144133235e-01, 7.724229450092265e-01), (3.309400098336085e-03, 8.370898089603943e-01), (-3.165171399479203e-01, 7.749498051574365e-01), (-6.030773102921207e-01, 5.805411770108829e-01), (-7.790318876148811e-01, 3.063325292447047e-01)], // N=29
    &[(1.906550235770500e-01, -1.251279221992894e-01), (-1.906550235770505e-01, 1.251279221992881e-01), (-1.252739663267574e-01, -1.908775482228398e-01), (1.252739663267569e-01, 1.908775482228389e-01), (-4.793957733544997e-01, -1.908775482228389e-01), (1.562443061668476e-02, -5.157619829859753e-01), (4.793957733544997e-01, 1.908775482228381e-01), (-1.562443061668549e-02, 5.157619829859752e-01), (3.235358054266176e-01, -4.191973660368371e-01), (5.133159609208916e-01, -1.300329702388313e-01), (-3.235358054266180e-01, 4.191973660368356e-01), (-5.133159609208926e-01, 1.300329702388304e-01), (-3.023348698406292e-01, -4.606618628720203e-01), (3.023348698406285e-01, 4.606618628720195e-01), (-7.765665712801202e-01, -3.166696657983324e-01), (-5.995056677662496e-01, -5.864539804475137e-01), (-2.995025448890267e-01, -7.833476510921483e-01), (1.845675556828758e-02, -8.384477712061031e-01), (3.336833930668314e-01, -7.694093254295763e-01), (5.995056677662476e-01, -5.864539804475155e-01), (7.765665712801193e-01, -3.166696657983347e-01), (8.386508909353102e-01, -3.800107453683619e-17), (7.765665712801193e-01, 3.166696657983343e-01), (5.995056677662479e-01, 5.864539804475153e-01), (2.995025448890292e-01, 7.833476510921474e-01), (-1.845675556828469e-02, 8.384477712061033e-01), (-3.336833930668290e-01, 7.694093254295775e-01), (-5.995056677662458e-01, 5.864539804475173e-01), (-7.765665712801183e-01, 3.166696657983368e-01), (-8.386508909353102e-01, 2.314793940816287e-15)], // N=30
    &[(-7.235434481492721e-15, -6.982441881816653e-15), (-2.403015595542252e-01, -2.081072551429337e-01), (6.007538988851559e-02, -3.121608827144404e-01), (3.003769494427433e-01, -1.040536275715004e-01), (2.403015595542110e-01, 2.081072551429387e-01), (-6.007538988851837e-02, 3.121608827144290e-01), (-3.003769494427401e-01, 1.040536275714948e-01), (-5.406785089969571e-01, -1.040536275714042e-01), (-1.802261696657313e-01, -5.202681378573584e-01), (3.604523393312666e-01, -4.162145102859329e-01), (5.406785089969456e-01, 1.040536275714701e-01), (1.802261696656655e-01, 5.202681378573778e-01), (-3.604523393312508e-01, 4.162145102859425e-01), (-4.806031191084420e-01, -4.162145102858301e-01), (1.201507797770217e-01, -6.243217654288732e-01), (6.007538988854788e-01, -2.081072551429760e-01), (4.806031191083961e-01, 4.162145102858792e-01), (-1.201507797770509e-01, 6.243217654288563e-01), (-6.007538988854578e-01, 2.081072551430116e-01), (-7.809800685511661e-01, -3.121608827143109e-01), (-4.205277292199517e-01, -7.283753930002527e-01), (-1.201507797772363e-01, -8.324290205717750e-01), (4.205277292197794e-01, -7.283753930003504e-01), (6.608292887739968e-01, -5.202681378574080e-01), (8.410554584396736e-01, -6.201228577639296e-17), (7.809800685511273e-01, 3.121608827144102e-01), (4.205277292198589e-01, 7.283753930003066e-01), (1.201507797771396e-01, 8.324290205717865e-01), (-4.205277292197701e-01, 7.283753930003559e-01), (-6.608292887739716e-01, 5.202681378574401e-01), (-8.410554584396682e-01, 1.036071843966691e-13)], // N=31
    &[(1.957700707667567e-01, 1.220220718990327e-01), (-1.662737799293229e-01, -1.617848364744130e-01), (-1.016067734245263e-01, 2.087488409396241e-01), (1.427522617339738e-01, -1.831723445878190e-01), (-3.764159765680410e-01, 6.579982276526583e-02), (-1.452595631373280e-01, 5.154228598582088e-01), (-3.129013542115361e-01, -4.346490415096291e-01), (4.107859147546264e-01, 3.450079610570032e-01), (2.720497287885988e-01, -4.646624597653229e-01), (4.853652204265945e-01, -2.400494126005895e-01), (5.421351577559493e-01, 6.446937851911759e-02), (-2.559778469998797e-02, -5.504556858583433e-01), (1.640462181673656e-01, 5.322886115722473e-01), (-4.200687662808427e-01, 3.724738416838506e-01), (-5.230435508502544e-01, -2.070643822699501e-01), (7.985737781373178e-02, 8.410946078827654e-01), (-8.294840219615394e-01, -1.618011787324146e-01), (-7.154628705260687e-01, -4.498180132312267e-01), (-5.053206738873498e-01, -6.774026724709055e-01), (-2.272896274734534e-01, -8.139796000955238e-01), (8.127733835236332e-02, -8.411999514972914e-01), (3.789248518409503e-01, -7.554067254042712e-01), (6.256645484282113e-01, -5.681260748890273e-01), (7.883474297438171e-01, -3.045187911197068e-01), (8.451173670731719e-01, -5.110171441387483e-17), (7.883474297438169e-01, 3.045187911197069e-01), (6.256645484282112e-01, 5.681260748890274e-01), (3.789248518409501e-01, 7.554067254042713e-01), (-2.408250086229000e-01, 8.100781933557220e-01), (-5.165410459269620e-01, 6.688861726791565e-01), (-7.228607982940133e-01, 4.378305955714287e-01), (-8.320656082498872e-01, 1.479533294537009e-01)], // N=32
    &[(-9.077282168345939e-02, -2.422735694804337e-01), (2.055959506805198e-01, -1.572521296523987e-01), (-7.257139253767668e-02, 2.535806256379462e-01), (-2.646128931619812e-01, 1.236877580272411e-02), (2.181219171113022e-01, 1.508163605051299e-01), (-4.557169642653348e-01, -2.852734361630204e-01), (6.309555871070360e-02, -5.339268071285171e-01), (6.309555871070434e-02, 5.339268071285176e-01), (-4.557169642653350e-01, 2.852734361630209e-01), (5.138435291198770e-01, -1.653282787141430e-01), (5.263391946181425e-01, 1.427414419770019e-01), (3.527265067147419e-01, -4.282054354894469e-01), (3.527265067147421e-01, 4.282054354894453e-01), (-2.442718566852471e-01, -5.096705416332327e-01), (-2.442718566852468e-01, 5.096705416332333e-01), (-5.726877344718592e-01, 1.869407258580061e-17), (-8.279825351487174e-01, -1.728804766604015e-01), (-7.110117649421932e-01, -4.581539128234222e-01), (-4.995666573621052e-01, -6.825510182936347e-01), (-2.191126078452068e-01, -8.169653620594312e-01), (8.825480755074361e-02, -8.412216275547165e-01), (3.838955330738955e-01, -7.537021675751844e-01), (6.285268690255897e-01, -5.660359640822431e-01), (7.896438914307250e-01, -3.031588073069393e-01), (8.458384820529422e-01, -4.898764618645207e-17), (7.896438914307251e-01, 3.031588073069396e-01), (6.285268690255892e-01, 5.660359640822433e-01), (3.838955330738965e-01, 7.537021675751859e-01), (8.825480755074419e-02, 8.412216275547163e-01), (-2.191126078452062e-01, 8.169653620594315e-01), (-4.995666573621053e-01, 6.825510182936347e-01), (-7.110117649421930e-01, 4.581539128234227e-01), (-8.279825351487173e-01, 1.728804766604018e-01)], // N=33
    &[(-5.029172833956797e-03, -3.971462915894432e-02), (1.363950256688357e-01, 2.326739171587723e-01), (-1.650156735426279e-01, 2.162584123662596e-01), (2.963815263775065e-01, -2.329912436643237e-02), (-3.051801001054407e-01, -7.176613855770045e-02), (-1.273472151007449e-01, -3.156787118449010e-01), (1.740634841107100e-01, -2.992632070523868e-01), (4.076479930705187e-01, 3.651114725298692e-01), (-1.330942338357235e-01, 5.308193652713066e-01), (-5.330536883863587e-01, 1.262023088289340e-01), (4.974538810636577e-01, -2.484390372215190e-01), (-4.048907555535073e-01, 3.995009386175750e-01), (3.523863610854193e-02, -5.700086538163894e-01), (1.682189745147023e-01, 5.489364530685868e-01), (5.676344937791833e-01, 1.091384310046758e-01), (-3.945234402792409e-01, -4.561591129549550e-01), (-5.723563252839626e-01, -2.122465396677843e-01), (3.394035055982413e-01, -5.518113325478121e-01), (-8.450286688152288e-01, -8.275649576543208e-02), (-6.946743675507292e-01, -4.882106223537367e-01), (-3.829728317491573e-01, -7.577954201847837e-01), (-9.365375667892493e-02, -8.438904327997355e-01), (2.075022862774192e-01, -8.233255066501000e-01), (6.412235980220126e-01, -5.565558247389278e-01), (7.954139327425308e-01, -2.970501040400134e-01), (8.490713095559906e-01, -2.852958192807299e-17), (7.885334654383195e-01, 3.148603858773502e-01), (6.285469647296501e-01, 5.708334274025508e-01), (3.891179461738271e-01, 7.546584079412761e-01), (1.005080213083811e-01, 8.431015516316434e-01), (-2.008051870420261e-01, 8.249844638343355e-01), (-4.767384786152526e-01, 7.025969767360392e-01), (-6.924164396864776e-01, 4.914077357581163e-01), (-8.205793725193281e-01, 2.181091059694678e-01)], // N=34
    &[(2.179082977820605e-02, -1.066313216751914e-02), (-3.959006075456227e-02, 2.815712047196228e-01), (-2.726501785622432e-01, 9.488563252419702e-02), (-2.112692880294749e-01, -1.973487043629453e-01), (2.490584726009124e-01, 1.830323502379147e-01), (1.284376788007303e-01, -2.895806306720601e-01), (3.557053216234372e-01, -9.588514826662548e-02), (-5.515905155774625e-01, -2.350087776099474e-02), (-2.468476154971695e-01, -4.938326061064712e-01), (2.713397594529414e-01, 4.808109015720922e-01), (-2.889923215543203e-01, 4.704124001482011e-01), (5.458222632534053e-01, 1.344043813768577e-01), (4.053184168652409e-02, -5.749594756828877e-01), (3.983786296663994e-01, -4.172546685924174e-01), (-4.858210424863454e-01, -3.147789198235233e-01), (-1.074095260343392e-02, 5.787853536717681e-01), (-5.126506789803720e-01, 2.725602823128240e-01), (6.336379101715144e-01, -2.050730487017408e-01), (5.698993401120498e-01, 4.863514949627432e-01), (-8.498083383449740e-01, -3.881921847623514e-02), (-7.840388652538569e-01, -3.300972605387637e-01), (-6.216638816668748e-01, -5.807023005590952e-01), (-3.826904546776991e-01, -7.597559868420437e-01), (-9.656374438277457e-02, -8.451961825011576e-01), (2.014610875932344e-01, -8.264953562056493e-01), (4.746628501086568e-01, -7.059577341246988e-01), (6.893789316453419e-01, -4.984353842247547e-01), (8.506945066495682e-01, 5.862978279042069e-18), (7.982852571002494e-01, 2.939758356398374e-01), (4.158212551541514e-01, 7.421413796614347e-01), (1.337405430977760e-01, 8.401158317611114e-01), (-1.648190375613357e-01, 8.345752383704581e-01), (-4.430704065122223e-01, 7.262022848468914e-01), (-6.667287639382730e-01, 5.283501670115137e-01), (-8.108685017478836e-01, 2.572419415975833e-01)], // N=35
    &[(2.762351876558392e-03, -6.485791267614170e-04), (-1.656702008755901e-01, 2.431723939661973e-01), (-2.933438725201097e-01, -2.425540061658591e-02), (-1.249113197679573e-01, -2.680763737095434e-01), (1.304360235210771e-01, 2.667792154560217e-01), (1.705247798410363e-01, -2.449311194567357e-01), (2.981984514855525e-01, 2.249667512604577e-02), (5.335380632913146e-02, 5.529199562451971e-01), (-4.530561584264545e-01, 3.214144115870611e-01), (-5.041229252611922e-01, -2.333031342978092e-01), (-4.015038605972902e-02, -5.541035358276220e-01), (5.106584354382548e-01, 2.290855106555086e-01), (5.707430516396562e-01, -9.385465779935602e-02), (-5.793482122899025e-01, 5.333138549708909e-02), (-2.420605346096584e-01, 5.294986216481931e-01), (-3.352531241050622e-01, -4.768214744779530e-01), (3.428960074737799e-01, 4.733680509854838e-01), (2.573660725132401e-01, -5.282626948832024e-01), (5.169248026810072e-01, -3.852680888997180e-01), (6.490808210710461e-01, 5.512050366996962e-01), (8.001540671305056e-01, -2.921343905963780e-01), (-8.489795017483903e-01, -6.962047293358675e-02), (-7.737542147196799e-01, -3.562549927284857e-01), (-6.048844135635483e-01, -5.997733329086288e-01), (-3.597157189180784e-01, -7.721514140398245e-01), (-7.342087503825237e-02, -8.486592836639850e-01), (2.217598166198072e-01, -8.224571650689179e-01), (5.109823989827734e-01, -6.815498459910391e-01), (8.518293283519980e-01, -4.624974396851410e-18), (8.002825050484734e-01, 2.918237768824635e-01), (3.669708730029981e-01, 7.687298504727506e-01), (8.140917300134196e-02, 8.479302749587831e-01), (-2.140051679374478e-01, 8.245089403617801e-01), (-4.835192816580639e-01, 7.013004412556082e-01), (-6.945149054748596e-01, 4.932162311944752e-01), (-8.214560457874792e-01, 2.254399465038096e-01)], // N=36
    &[(-2.106099452747911e-14, -1.207362486262676e-14), (-2.959118089581668e-01, -8.870223473140584e-14), (-1.479559044790255e-01, -2.562671438376141e-01), (1.479559044791169e-01, -2.562671438375413e-01), (2.959118089581188e-01, 5.607650656338685e-14), (1.479559044789497e-01, 2.562671438376140e-01), (-1.479559044791934e-01, 2.562671438375404e-01), (-4.260220477604378e-01, -3.574749431492544e-01), (9.657135810338480e-02, -5.476833875074431e-01), (5.225934058638435e-01, -1.902084443582569e-01), (4.260220477604158e-01, 3.574749431491275e-01), (-9.657135810346604e-02, 5.476833875073828e-01), (-5.225934058638667e-01, 1.902084443581917e-01), (-5.739779522395467e-01, -1.012077993117205e-01), (-1.993404508547423e-01, -5.476833875074649e-01), (3.746375013847604e-01, -4.464755881958169e-01), (5.739779522395499e-01, 1.012077993115928e-01), (1.993404508546797e-01, 5.476833875074730e-01), (-3.746375013848516e-01, 4.464755881957801e-01), (-8.520440955209310e-01, -1.306204106142639e-13), (-8.006595491451830e-01, -2.914162436699667e-01), (-6.527036446660817e-01, -5.476833875075038e-01), (-4.260220477603957e-01, -7.378918318657022e-01), (-1.479559044790164e-01, -8.390996311772994e-01), (1.479559044791231e-01, -8.390996311772823e-01), (4.260220477604942e-01, -7.378918318656498e-01), (6.527036446661623e-01, -5.476833875074205e-01), (8.006595491452351e-01, -2.914162436698554e-01), (8.520440955209448e-01, -2.240600120317963e-16), (8.006595491451707e-01, 2.914162436700284e-01), (6.527036446660506e-01, 5.476833875075502e-01), (4.260220477603537e-01, 7.378918318657307e-01), (1.479559044789729e-01, 8.390996311773122e-01), (-1.479559044791647e-01, 8.390996311772764e-01), (-4.260220477605282e-01, 7.378918318656282e-01), (-6.527036446662494e-01, 5.476833875073067e-01), (-8.006595491452732e-01, 2.914162436697221e-01)], // N=37
    &[(3.026255899802030e-03, -6.848211302380963e-03), (7.632854874317281e-02, 2.791216515663110e-01), (-2.399608188209092e-01, -1.859551535667359e-01), (1.957147217025251e-02, -3.064342820137844e-01), (2.652376567397298e-01, -1.597361013244378e-01), (3.154357840514002e-01, 1.219594408356957e-01), (-3.409568438482528e-01, 8.176117650514482e-02), (-2.046234007170167e-01, 3.333271176467510e-01), (-5.295776138936791e-01, -1.950230253154528e-01), (2.126619918743340e-01, 5.306875927079545e-01), (5.542858796541433e-01, -1.520791765815709e-01), (1.706342790872465e-01, -5.494409873222265e-01), (-3.714467228044377e-01, -4.400883617708656e-01), (-1.149639720553479e-01, -5.669301097352836e-01), (4.163004636567215e-01, -4.027428066328724e-01), (4.517692271825623e-01, 3.735253819773424e-01), (-6.828995758585531e-02, 5.848930587883963e-01), (-4.906526180382051e-01, 3.256123722129995e-01), (6.020563553535067e-01, 1.300381963502196e-01), (-6.269860611694422e-01, 7.404643107139453e-02), (-3.543191749070443e-01, 5.771783133546465e-01), (-7.945760459474086e-01, 3.208527249215616e-01), (7.597934401928895e-01, 3.962589175788824e-01), (-8.505304841877690e-01, -1.045596197664282e-01), (-7.686940979932144e-01, -3.787402834775910e-01), (-6.011547071919638e-01, -6.106945526524084e-01), (-3.665915617210742e-01, -7.745614536583171e-01), (-9.115650324212322e-02, -8.520711886544754e-01), (1.944417479004556e-01, -8.345820662414203e-01), (4.583613598293768e-01, -7.240439782456226e-01), (6.711774888050897e-01, -5.327810029831000e-01), (8.091629048025175e-01, -2.821173729317957e-01), (8.569333805018841e-01, -5.602120574788340e-17), (5.836288583373755e-01, 6.274648789647059e-01), (3.445216230291467e-01, 7.846270896953175e-01), (6.700308949098864e-02, 8.543098996365684e-01), (-2.179857317758075e-01, 8.287442544962511e-01), (-6.403483922282324e-01, 5.694635679208099e-01)], // N=38
    &[(-9.054297668998718e-04, 3.442480932594931e-02), (-2.389340271807621e-01, 1.878516955025123e-01), (-2.900951596386373e-01, -9.067985461782072e-02), (-8.976168911817151e-02, -2.908392572848786e-01), (1.891741044192621e-01, -2.419300662217465e-01), (3.131790134065256e-01, 1.266779008083178e-02), (1.781241094423563e-01, 2.615803426008627e-01), (-6.313722866514083e-02, 4.098714502957871e-01), (-5.055749216365052e-01, -2.744344683181304e-01), (-5.937719783460316e-02, -5.723957677339295e-01), (-5.116013826386959e-01, 2.643356752262735e-01), (4.416954230980275e-01, -3.701106790286182e-01), (5.543499922043816e-01, 1.611058070188524e-01), (1.780337501327149e-01, 5.583094672338078e-01), (4.192950882402125e-01, 4.100183595388832e-01), (5.767503270621968e-01, -1.211981265085881e-01), (-3.358045841230743e-01, 4.863554300195483e-01), (2.229216056662587e-01, -5.499308744826857e-01), (-5.958746698460606e-01, -6.025747595239486e-03), (-3.328529478870210e-01, -4.988546226512258e-01), (-7.110283282192487e-02, 6.929506530592977e-01), (-8.476007119858600e-01, -1.357611922333179e-01), (-7.573009637763042e-01, -4.041699129562084e-01), (-5.845789900268202e-01, -6.285900672893038e-01), (-3.482333003881711e-01, -7.845964802217190e-01), (-7.398700716124286e-02, -8.552099105172196e-01), (2.083117963396185e-01, -8.327450172659756e-01), (4.679386072222276e-01, -7.196468079179331e-01), (6.766364700800156e-01, -5.282245314572250e-01), (8.116913740441848e-01, -2.793119789371946e-01), (8.584043734019237e-01, -1.265860534760108e-16), (8.116913740441849e-01, 2.793119789371943e-01), (6.766364700800159e-01, 5.282245314572245e-01), (4.679386072222280e-01, 7.196468079179331e-01), (1.700681459759304e-01, 8.413886699973194e-01), (-3.373930658287681e-01, 7.893186855803003e-01), (-5.758651989598130e-01, 6.365825483804309e-01), (-7.516619974754352e-01, 4.145627935871567e-01), (-8.456502975880185e-01, 1.474233443686734e-01)], // N=39
    &[(-2.503930417341152e-02, -2.315169090595579e-02), (-2.296942645205924e-01, -2.236229723362587e-01), (-3.190528216310117e-01, 4.252368516404806e-02), (3.055169780774588e-01, 1.016532935972171e-01), (-1.666425494269859e-01, 2.782992223898942e-01), (2.720726100320880e-01, -1.770947454514682e-01), (3.262325052152781e-02, -3.236655449219768e-01), (1.127576282799560e-01, 3.057680360659706e-01), (-4.987564152691883e-01, 2.871818054686715e-01), (-3.614961060488277e-02, 5.776765002835190e-01), (4.533979323967123e-01, 3.602373942330409e-01), (-5.247660219341611e-01, -2.460936226883446e-01), (5.557678721415944e-01, -1.663082143682358e-01), (-9.679558211207435e-02, -5.728035805311490e-01), (1.836737020912222e-01, -5.603145595153892e-01), (4.231230616017823e-01, -4.137437600448805e-01), (-3.591130971541946e-01, -4.727610079454310e-01), (5.860427429365243e-01, 1.128018485563961e-01), (-5.992272359769708e-01, 2.459904923077575e-02), (2.481014402175281e-01, 5.517376431267795e-01), (-3.221636537479859e-01, 5.120345024359717e-01), (4.492474397533206e-01, -7.328833708282748e-01), (-8.513329342864635e-01, -1.191208434768277e-01), (-7.675485954912534e-01, -3.870745327593063e-01), (-6.018956707112871e-01, -6.137419180163927e-01), (-3.720431007740774e-01, -7.749461087829531e-01), (-1.025075156314740e-01, -8.534926769401679e-01), (1.779617685718224e-01, -8.410036559244081e-01), (6.811366720412275e-01, -5.244143155483381e-01), (8.137814825810393e-01, -2.769787698716932e-01), (8.596263957972864e-01, -1.585621367269764e-16), (8.137814825810390e-01, 2.769787698716942e-01), (6.811366720412267e-01, 5.244143155483391e-01), (4.758401798620425e-01, 7.159145644420779e-01), (2.197894254656200e-01, 8.310536377424286e-01), (-5.970459960183659e-02, 8.575505239563528e-01), (-3.328303879545085e-01, 7.925790012392973e-01), (-5.704556837068997e-01, 6.430690890393695e-01), (-7.472347992090881e-01, 4.249678754945901e-01), (-8.443120472735572e-01, 1.615385625173301e-01)], // N=40
    &[(7.829729980132979e-03, -6.786836741556888e-02), (-5.647257353145708e-02, 1.990490801881026e-01), (-3.152700395869130e-01, -4.221972461424911e-02), (2.850378943809976e-01, 1.424258204504323e-01), (-1.712581132913885e-01, -2.759723185181621e-01), (2.986296121668635e-01, -1.318152657315570e-01), (9.850911662713274e-02, -3.270149647489684e-01), (-3.290431541137009e-01, 2.319882464376285e-01), (1.489052382549202e-01, 3.812568311154292e-01), (-5.721799790632255e-01, -1.390545998939363e-01), (-3.177885424623259e-02, 5.879763724974433e-01), (5.525722956089730e-01, 2.048985754305646e-01), (-2.320393179391574e-01, -5.437135279606409e-01), (4.967501801692190e-01, -3.220430161774721e-01), (2.999892033204051e-01, -5.135236367677968e-01), (3.772791197936377e-02, -5.947561741914470e-01), (5.962593742238437e-01, -6.615704475513343e-02), (-4.589759560756734e-01, -3.891836850711485e-01), (4.163612059405185e-01, 4.432811442637063e-01), (-3.006427390224587e-01, 5.323713229498408e-01), (-5.964352896294747e-01, 1.344255456038491e-01), (-5.432162113809831e-01, 4.037718650190888e-01), (-8.325625066653720e-01, -2.261215246798306e-01), (-7.193584836778204e-01, -4.762506098570435e-01), (-5.332998726826604e-01, -6.781463833311484e-01), (-2.932301623672251e-01, -8.113614134937337e-01), (-2.346293244870391e-02, -8.624040597245392e-01), (2.486805567560927e-01, -8.261048675077146e-01), (4.956383841260008e-01, -7.061401161309460e-01), (6.923993609748148e-01, -5.146594955406216e-01), (8.190360933403399e-01, -2.710556201856975e-01), (8.627231719552103e-01, 8.220356112718736e-17), (8.190360933403394e-01, 2.710556201856978e-01), (6.923993609748142e-01, 5.146594955406224e-01), (4.956383841259997e-01, 7.061401161309462e-01), (2.486805567560923e-01, 8.261048675077148e-01), (-2.346293244870437e-02, 8.624040597245389e-01), (-2.932301623672253e-01, 8.113614134937338e-01), (-5.332998726826600e-01, 6.781463833311490e-01), (-8.030865055346641e-01, 3.151877790406546e-01), (-8.614469591050445e-01, 4.690850751336177e-02)], // N=41
    &[(1.108941724858067e-01, 4.948931069757651e-02), (-1.265902404154522e-01, -8.336467910809325e-02), (-3.132813578320640e-01, 1.146137430942967e-01), (1.376119320462746e-01, -3.151121938851085e-01), (3.253001995252550e-01, -1.180788382633927e-01), (-1.355541932864791e-01, 3.206770439650019e-01), (1.365651733086707e-01, 3.203952513737512e-01), (-1.315027451421757e-01, -3.554398456965304e-01), (3.632154598708670e-01, 1.513863023577454e-01), (-3.700856228077292e-01, -2.048514180227250e-01), (5.917973626652965e-01, 3.650768122532493e-03), (8.083185693500354e-02, 5.867461973506853e-01), (-4.110117800137014e-01, 4.264967659123428e-01), (3.613110201428115e-01, -4.700565289295879e-01), (1.179354838065042e-01, -5.917831788046639e-01), (-5.697769418766911e-01, 2.054930275832518e-01), (3.393652006599304e-01, 5.018371921791377e-01), (-6.032533764488784e-01, -6.455948083902124e-02), (-3.749981275344419e-01, -4.769265846111668e-01), (5.489992876210942e-01, -2.730231733072053e-01), (-1.912875094645920e-01, 5.870279900044353e-01), (-1.512298924636187e-01, -6.317710418904211e-01), (5.586636348597712e-01, 3.407247291779337e-01), (-6.081658811756980e-01, -3.366346474274751e-01), (-8.553948374234366e-01, 1.034706367544113e-01), (-8.413336348167555e-01, -1.963427102436106e-01), (-6.130783859022333e-01, -6.087098140159201e-01), (-3.933311301930807e-01, -7.692095728478781e-01), (-9.211266310339836e-03, -8.638911375357317e-01), (2.599541099602853e-01, -8.239032744531258e-01), (5.033296462953126e-01, -7.021766245753740e-01), (6.967702498270736e-01, -5.107875917597731e-01), (8.210848325481804e-01, -2.687237293190922e-01), (8.639402438478241e-01, -1.909061175039222e-17), (8.210848325481794e-01, 2.687237293190943e-01), (6.147749478362067e-01, 6.069963001969098e-01), (3.954765136363804e-01, 7.681087631981305e-01), (1.369431699114432e-01, 8.530177683696594e-01), (-1.351761964881482e-01, 8.532995610234112e-01), (-3.938848402372463e-01, 7.689261847349371e-01), (-6.135164831098031e-01, 6.082682548779990e-01), (-7.722816449727961e-01, 3.872645165489091e-01)], // N=42
    &[(-6.336989622269965e-02, 7.072622346419737e-02), (1.461896976632951e-01, -9.879848597865445e-02), (-1.054028042263883e-01, -1.955200631692502e-01), (2.161672785491552e-01, 2.519917674467878e-01), (-3.365612713607186e-01, -5.131533048848173e-02), (-3.889383763233421e-02, 3.391564249267515e-01), (-2.903913681543134e-01, 2.160365876421942e-01), (1.041567896596078e-01, -3.650447726121008e-01), (3.789405403888363e-01, 3.714597220886101e-02), (3.808819526070221e-01, -2.323908182668455e-01), (-3.159683472303703e-01, -3.637936576539000e-01), (-3.577112332780104e-01, 4.770454414580887e-01), (-5.958293850405270e-01, 2.273815189161213e-02), (1.524945844378356e-01, 5.797308789869053e-01), (3.920762068913808e-01, 4.562217834357126e-01), (-1.579096937922510e-01, -5.821312691061531e-01), (3.392738953679617e-01, -4.987038297291798e-01), (5.548494687310619e-01, 2.413759881977856e-01), (-5.574592353453002e-01, -2.440606151852102e-01), (-1.164764211951138e-01, 5.972935846482283e-01), (6.133369543044164e-01, -9.594111072882687e-02), (-5.502365123497626e-01, 2.883979728302524e-01), (1.064823183705290e-01, -6.345785226649676e-01), (5.917669388199752e-01, -4.043581170036631e-01), (-4.565540004772216e-01, -5.937708839231602e-01), (-8.267783669453855e-01, -2.550631537796735e-01), (-7.081690338072476e-01, -4.971079359871672e-01), (-2.984953470391022e-01, -8.121084953754134e-01), (-3.410333487632179e-02, -8.645557489342289e-01), (3.144346240549831e-01, -8.060710562105021e-01), (5.472262010524147e-01, -6.701963632747152e-01), (8.232427354949385e-01, -2.662537866767770e-01), (8.652281089197895e-01, -7.732085608078991e-17), (8.232427354949385e-01, 2.662537866767768e-01), (7.013613131259522e-01, 5.066675329199141e-01), (5.114124844076753e-01, 6.979089849377792e-01), (2.718308619541303e-01, 8.214180804889717e-01), (5.867941598021010e-03, 8.652082106211856e-01), (-2.606644649240796e-01, 8.250295250418345e-01), (-5.018992770069765e-01, 7.047813818516963e-01), (-6.944245560787279e-01, 5.161339132238586e-01), (-8.195556439498477e-01, 2.773954342357894e-01), (-8.651485166406125e-01, 1.173561329714934e-02)], // N=43
    &[(4.694571706544728e-03, 1.408668882966402e-01), (1.232830703576047e-01, -9.725269807492216e-02), (-1.427236421562516e-01, -9.510832785348937e-02), (-3.343991933377732e-01, 8.934939767009846e-02), (2.523472745839270e-01, 2.379869592583312e-01), (7.939961127884854e-02, -3.596234499611785e-01), (3.709357732349864e-01, -1.326271132319575e-04), (-1.953973833612878e-01, 3.161591555054623e-01), (-1.866071012350075e-01, -3.574790797397441e-01), (5.225531951609255e-02, 4.132792264671523e-01), (3.285610771617481e-01, -2.664422643861880e-01), (-3.982001630270290e-01, -1.692427780763044e-01), (5.781796087970711e-01, 1.666431566432605e-01), (2.830675634349237e-01, -5.311579097313701e-01), (-4.466894733277175e-01, 4.034314589377622e-01), (-5.856912833042029e-01, 1.766217011023977e-01), (4.595911101460121e-01, 4.047627430148235e-01), (-4.420836221057841e-01, -4.316135299625601e-01), (1.475759485575292e-02, -6.176652666088531e-01), (6.189897564852110e-01, -9.622316160947468e-02), (-2.454633965253475e-01, 5.774206409026249e-01), (2.594991550781765e-01, 5.800550102236425e-01), (-6.493829334223669e-01, -8.165633344816295e-02), (-2.512567968669924e-01, -6.169491503795739e-01), (2.189306352032457e-03, 6.745407118643154e-01), (5.779356942185744e-01, -3.590514960741646e-01), (5.004306592395659e-01, 7.075485033430916e-01), (-2.064952376949802e-01, 8.419574583849727e-01), (-8.179571964700232e-01, -2.874399267300741e-01), (-6.923053002989472e-01, -5.219090513812491e-01), (-5.014784750601561e-01, -7.072446717982623e-01), (-1.353135197452031e-01, -8.563678754541506e-01), (1.307008719775420e-01, -8.570839916834295e-01), (3.844108366555328e-01, -7.771126014918843e-01), (6.019316388338767e-01, -6.239823626565532e-01), (8.260787398326684e-01, -2.631911896932755e-01), (8.669923221895878e-01, 1.029509145960425e-16), (8.261821745014503e-01, 2.628663182527319e-01), (7.075936758503938e-01, 5.009859046242914e-01), (2.094331419141177e-01, 8.413164956208049e-01), (-4.597365102994636e-01, 7.350632815161987e-01), (-6.609625871018342e-01, 5.610740995513350e-01), (-7.999643970783202e-01, 3.342643417159701e-01), (-8.636560471964840e-01, 7.598630716540856e-02)], // N=44
    &[(8.596686484096633e-02, -9.795388959737526e-02), (2.956825309780396e-02, 1.598958459040618e-01), (-1.655368623339573e-01, -1.787165235441062e-02), (-4.422634499443351e-03, -3.459398325733976e-01), (3.081321284667721e-01, 1.694636171044847e-01), (3.498252448264514e-01, -9.116825652800184e-02), (-2.559263616743666e-01, -2.658575953304326e-01), (-1.571295625422284e-01, 3.465085654834400e-01), (-3.538032584938409e-01, 1.671230869807568e-01), (1.551196697992240e-01, 3.920684783760722e-01), (2.594357454860418e-01, -3.391541995040241e-01), (-4.457515105736395e-01, -8.033057611735464e-02), (-7.064461114826177e-02, -6.014431384491538e-01), (6.052259122207531e-01, -2.455152740338858e-02), (-4.483411208338895e-01, 4.135574232427534e-01), (-5.103097036380866e-01, -3.362593342016131e-01), (4.122795781004666e-01, 4.515333509246051e-01), (8.257074735231277e-03, 6.113825629118962e-01), (5.650962421795683e-01, 2.363256450113368e-01), (-3.221483383231856e-01, -5.213609012061879e-01), (1.932137688372233e-01, -5.946575053797801e-01), (5.570109997069028e-01, -2.840560778760125e-01), (-6.153832178379099e-01, 1.318638417495834e-01), (-2.550695540725496e-01, 5.933166816589307e-01), (4.475971108009434e-01, -5.242557665085986e-01), (2.654169830364738e-01, 6.708474354604289e-01), (-7.049509647740831e-01, -1.579840724065290e-01), (8.261172341722084e-01, -2.605970933157190e-01), (-1.822897054430826e-01, 8.486362057729107e-01), (-7.620212397869487e-01, -4.156859800724847e-01), (-6.018619204832185e-01, -6.254865566800877e-01), (-3.860533760488024e-01, -7.774535322169310e-01), (-1.345496488738793e-01, -8.575357694598961e-01), (1.293947784792936e-01, -8.583287221208171e-01), (3.813751341521249e-01, -7.797590723843546e-01), (7.103230875908552e-01, -4.989111295117147e-01), (8.680271907695408e-01, -4.646200531423977e-17), (8.278975207283555e-01, 2.608771724147255e-01), (7.112189713708665e-01, 4.976331768254873e-01), (5.287798491842219e-01, 6.883771313836420e-01), (8.533893862601949e-02, 8.638220126099156e-01), (-4.876586676184504e-01, 7.180948598979513e-01), (-6.809302343797904e-01, 5.383356014817747e-01), (-8.112417788807617e-01, 3.088008745350921e-01), (-8.665444636218268e-01, 5.071386873056296e-02)], // N=45
    &[(-7.829676220417756e-02, 1.126914372253556e-01), (-5.670262809367728e-03, -1.376876608127863e-01), (1.748511469708927e-01, 5.039828167012398e-02), (-3.514268317755050e-01, -5.844872489689322e-02), (3.134768896948533e-01, -1.703894095696061e-01), (1.764738639680048e-01, 3.110928691442101e-01), (-2.212305656035418e-01, -2.843098181015858e-01), (-3.236672682525702e-01, 2.007687663758981e-01), (-7.667404520706526e-02, 3.733860246994424e-01), (1.329554799145916e-01, -3.584753520525166e-01), (4.270376149641469e-01, 1.164761638233214e-01), (-1.206875364747070e-01, -5.248413138405089e-01), (-4.184120997038894e-01, 4.436426391206489e-01), (5.199762474592978e-02, 6.077696501932075e-01), (3.532804922627029e-01, -4.978352820273375e-01), (-6.112224441678297e-01, -3.675676946494930e-02), (-5.422297425046562e-01, -2.881614397993597e-01), (5.338019020429636e-01, -3.097493395444260e-01), (3.034093155596860e-01, 5.388025357769539e-01), (6.165618226757983e-01, -6.253466221803305e-02), (4.994251880785099e-01, 3.669244427300727e-01), (-3.792654367624751e-01, -4.916483833675207e-01), (-5.834628806449002e-01, 2.224607218078421e-01), (1.224287464608228e-01, -6.189623748225106e-01), (-2.085293366321744e-01, 5.982826304363471e-01), (6.889493957901610e-01, 1.879136166887182e-01), (-1.964871085208698e-01, -7.742781315448127e-01), (8.114902905631043e-01, -2.559462323475675e-01), (5.785278117829725e-01, 6.492848347943040e-01), (-8.636659544601333e-01, -1.018457490239959e-01), (-7.946732527969605e-01, -3.532504193584063e-01), (-6.542670594680032e-01, -5.729101608305487e-01), (-4.550650088051457e-01, -7.410852010727003e-01), (4.662917441466240e-02, -8.683991925268045e-01), (3.019177482119216e-01, -8.155593852089772e-01), (5.300744152538827e-01, -6.894291492104593e-01), (7.105958250341388e-01, -5.013432067275426e-01), (8.696501811003163e-01, -1.107649401103394e-18), (7.492152148385851e-01, 4.415518082198039e-01), (3.531695390918992e-01, 7.947092009945564e-01), (1.017578482781412e-01, 8.636763154108101e-01), (-1.587983345949154e-01, 8.550289623268162e-01), (-4.050840691998046e-01, 7.695442380840228e-01), (-6.149668322715212e-01, 6.149042467683256e-01), (-7.695854618184403e-01, 4.050057461882359e-01), (-8.550451197122350e-01, 1.587113125901283e-01)], // N=46
    &[(-7.576864702979953e-02, 1.249030869718106e-01), (-1.064011332077009e-01, -1.318354668151020e-01), (1.680526074880814e-01, 3.885525111675381e-02), (1.360630835648986e-01, -2.216360113274588e-01), (-3.549416096458076e-01, -4.407492312777570e-02), (2.045668193139600e-01, 2.948235041182857e-01), (-3.925443520392209e-02, 3.808713399733721e-01), (-3.192155097756061e-01, 2.120045176673161e-01), (3.731819738340711e-01, -1.185454390734838e-01), (-6.227363506801217e-02, -3.875142204207287e-01), (-3.047378518406073e-01, -2.977136759083783e-01), (4.096961856599562e-01, 1.374228139280388e-01), (2.701499531380111e-01, -4.427100840250802e-01), (2.917886721986074e-01, 5.382272481102325e-01), (5.114648400921786e-01, -3.370194263335267e-01), (-6.123196832011139e-01, -1.938562457916712e-02), (7.181323450471683e-02, -6.085882931182220e-01), (-2.044922662537561e-01, 5.797418842981201e-01), (-4.265229868085449e-01, 4.472451170176159e-01), (-5.765935833309125e-01, 2.366938162159259e-01), (4.973494375452622e-01, 3.806715377558404e-01), (4.945266577390622e-02, 6.283732086408624e-01), (-5.712709355983678e-01, -2.746659303806706e-01), (-2.146027502849110e-01, -5.964373518999867e-01), (6.307881158904389e-01, -9.636189146036693e-02), (-4.570669670575060e-01, -5.066368073876366e-01), (6.673023277163351e-01, 1.596063615411597e-01), (4.800677190409477e-01, -5.936655932631689e-01), (-8.706730669118138e-01, -9.062672719606025e-03), (-8.296243193090683e-01, -2.643429785211099e-01), (-7.154203507682062e-01, -4.963138555280763e-01), (-4.202908834770092e-01, -7.625675673332578e-01), (-1.778266667044142e-01, -8.523681118456065e-01), (8.031808014507545e-02, -8.670079166214437e-01), (3.313804804895447e-01, -8.051960622314080e-01), (7.180283799115472e-01, -4.925332142344028e-01), (8.310071475735340e-01, -2.599631553973945e-01), (8.707202314650228e-01, -1.733398652725461e-18), (7.764871496090330e-01, 3.939815071478431e-01), (6.265566096298703e-01, 6.046325631419205e-01), (4.213771019662952e-01, 7.619678860824342e-01), (1.790410955415937e-01, 8.521138466130641e-01), (-7.908252775559234e-02, 8.671214881931090e-01), (-3.302327539914158e-01, 8.056674560100411e-01), (-5.522634745462048e-01, 6.731706887295373e-01), (-7.255963019026292e-01, 4.813145833523796e-01), (-8.349469670416126e-01, 2.470167680754868e-01)], // N=47
    &[(-1.257055171301133e-01, -4.539502912455861e-02), (1.657511166386914e-01, 4.689054644120449e-02), (-4.167270656301536e-02, 1.955947266667714e-01), (8.171830607159347e-02, -1.940992093501255e-01), (-3.713061077761716e-01, 2.401624893944424e-02), (-1.052578454618668e-01, -3.678159166810759e-01), (-3.170251612903781e-01, -2.253652950785071e-01), (1.547969875794384e-01, 3.584972586659458e-01), (-2.872732972090732e-01, 2.650060047307743e-01), (4.101374802967503e-01, -2.668173710526646e-02), (3.261046697296504e-01, -2.676714928966032e-01), (3.728046362805001e-01, 2.257936763627294e-01), (-1.014113442317836e-01, 4.437254801368928e-01), (1.386733119152530e-01, -4.428836601454261e-01), (3.856980841729087e-01, 4.806884284656664e-01), (-5.945144457653517e-01, -1.702648681288471e-01), (-2.853773612531005e-01, -5.486322203688312e-01), (-3.470119348778413e-01, 5.131367582008965e-01), (6.101211801831480e-01, 1.318871609423283e-01), (-4.144620387598016e-02, -6.236999638331819e-01), (-6.194415136848653e-01, 8.373555890446958e-02), (-5.354087031177668e-01, 3.247253146958002e-01), (1.676904354718461e-01, 6.133920107688816e-01), (-4.971446770816129e-01, -4.061815987662616e-01), (3.763458558713897e-01, -5.358854746308919e-01), (6.474540241993489e-01, -1.205882525256662e-01), (5.632272165398809e-01, -3.620667970301615e-01), (-7.330994917172841e-02, 6.973943336523557e-01), (6.286952155535770e-01, 4.026501699701451e-01), (6.198657779431592e-01, -6.127233613711385e-01), (-8.464164218298575e-01, -2.112888867395129e-01), (-7.490466531461192e-01, -4.472056173769278e-01), (-5.875678228317033e-01, -6.448471186069566e-01), (-3.758005070031911e-01, -7.872977402095260e-01), (-1.318693496260701e-01, -8.623654836738766e-01), (1.233481812057170e-01, -8.636254853790059e-01), (3.680086444399980e-01, -7.909699048764858e-01), (8.138941326036512e-01, -3.140702050756047e-01), (8.723896794454228e-01, -4.781378938940383e-18), (8.350568354292158e-01, 2.524754134679866e-01), (5.785995626125682e-01, 6.529060414389093e-01), (3.648837262383681e-01, 7.924163167989953e-01), (1.199383887440505e-01, 8.641056276337765e-01), (-2.970003565489763e-01, 8.202771123301340e-01), (-5.216842790303646e-01, 6.992204701061397e-01), (-7.017185265473973e-01, 5.183192667681109e-01), (-8.216944104406627e-01, 2.930563915929040e-01), (-8.713434897493713e-01, 4.271154029380361e-02)], // N=48
    &[(1.340789334828600e-01, 3.009473373438253e-02), (-1.368540798842397e-01, -1.660093109377586e-02), (3.475746987685742e-02, -2.029703277912558e-01), (-3.753261627823673e-02, 2.164641304318623e-01), (1.998163937858722e-01, 3.137985844629896e-01), (-3.817758918315976e-01, 4.818627496738308e-02), (-3.292570571241886e-01, -1.996561105072653e-01), (3.691957790382385e-01, 1.244565108100401e-01), (2.735148156835012e-01, -2.876993420670920e-01), (-2.851769097443482e-01, 2.874217002519466e-01), (-1.488541758208925e-01, -3.775293138130356e-01), (8.990316998575110e-02, -4.622583280888716e-01), (4.571264613812515e-01, -1.131403560453128e-01), (-5.293632401641404e-02, 4.693411792613374e-01), (-3.731419967371491e-01, -4.953386913066165e-01), (-6.186751362755005e-01, -7.263467805441903e-02), (3.738854429987352e-01, 4.984879131286407e-01), (5.424180965530346e-01, 3.093297234493817e-01), (-2.924218155209601e-01, 5.519896843634500e-01), (-5.982018222435188e-01, 1.798824885884369e-01), (3.328815091883397e-01, -5.339911846829010e-01), (5.164931548860904e-01, -3.594321986611220e-01), (6.303487788960470e-01, 7.173285659402917e-02), (1.512261692027708e-01, 6.193470204786524e-01), (-5.535448780404463e-01, -3.174654880008451e-01), (-1.245190986551618e-01, -6.317076204288689e-01), (-5.061112553943626e-01, 4.158981735210044e-01), (1.492698634905893e-01, -7.085501707046808e-01), (7.001048005838407e-01, -1.848732126393421e-01), (-1.127917632720047e-01, 7.306433167525663e-01), (6.013413421389846e-01, -6.332324652703368e-01), (-8.715021107936161e-01, -5.642983332192524e-02), (-8.186352661412976e-01, -3.041982186605225e-01), (-6.968772053005368e-01, -5.263671873692184e-01), (-5.164743239972394e-01, -7.042403906749901e-01), (-2.926081987049735e-01, -8.228491339590137e-01), (-4.411800026409714e-02, -8.722120483340992e-01), (3.922482026931788e-01, -7.802830272987099e-01), (7.594714940886794e-01, -4.311650552551510e-01), (8.733271180986358e-01, -3.138038687832564e-17), (8.365802481648780e-01, 2.506665984666873e-01), (7.294320247602818e-01, 4.802386661448493e-01), (5.608993712059823e-01, 6.693968558241083e-01), (3.451649399615395e-01, 8.022227991199298e-01), (1.003835894319743e-01, 8.675386966465652e-01), (-3.573253735238237e-01, 7.968806890887293e-01), (-5.710148133972263e-01, 6.607891782462839e-01), (-7.589382299124779e-01, 4.321030182534982e-01), (-8.510287967616340e-01, 1.960873333209302e-01)], // N=49
    &[(-8.018150783587026e-02, 1.026125601584441e-01), (1.594345127781647e-01, 2.868967003824608e-02), (2.272057131084275e-03, -1.667083687277756e-01), (-2.373439634829505e-01, -9.278547860757827e-02), (-2.031233558025511e-01, 3.211662904793103e-01), (2.534349770511363e-01, 2.853661145424753e-01), (-3.641743198479583e-01, 1.289606245933293e-01), (3.574875465527110e-01, -1.617067374810516e-01), (1.922827433592200e-01, -3.503540380724686e-01), (3.314656355883563e-02, 4.051719820935834e-01), (4.038521537979129e-01, 8.472936826164687e-02), (-5.083729179350304e-02, -4.117794361254490e-01), (-2.904533124075379e-01, -3.378565460052513e-01), (-4.880758537366597e-01, -8.905047814837831e-02), (9.957041032413698e-02, -6.152496712207753e-01), (5.117518925617942e-01, -3.594008005406648e-01), (3.557236540810219e-01, 5.143147060867440e-01), (-1.145760461894862e-01, 6.147611443556216e-01), (-6.149282400736870e-01, 1.272569491379501e-01), (6.166388346448521e-01, -1.316308279826174e-01), (5.329637093579894e-01, 3.369270125337635e-01), (-3.488186011940381e-01, 5.252577564668497e-01), (-5.583002164545398e-01, -3.297764009308990e-01), (-1.911521516671113e-01, -6.196066988155930e-01), (3.465470893683034e-01, -5.480481011320819e-01), (1.354352405887207e-01, 6.341205736378518e-01), (-5.439471434861579e-01, 3.677608263330185e-01), (6.525861148992270e-01, 1.165389204980183e-01), (-4.307681722811463e-01, -5.456838086953950e-01), (-7.388231758126553e-01, -9.154276431684809e-02), (-6.268132936657003e-01, 6.099513865753711e-01), (-8.090475385305355e-01, -3.322686870993689e-01), (-6.815154943571420e-01, -5.481760948638650e-01), (-3.749792627393859e-01, -7.901588147609844e-01), (-1.353632421253502e-01, -8.640817048811821e-01), (1.153797584063354e-01, -8.669763038164032e-01), (3.566384393063905e-01, -7.986046729378429e-01), (5.685811206062762e-01, -6.645870216301005e-01), (7.337859237997668e-01, -4.759397210386831e-01), (8.386728658828270e-01, -2.481697484806364e-01), (8.746201461372001e-01, -8.809350853780061e-18), (8.205594009877176e-01, 3.027254027658315e-01), (7.009369954464792e-01, 5.231134948015767e-01), (5.236969401695118e-01, 7.005011883545578e-01), (3.034085266772110e-01, 8.203070559056653e-01), (5.817966014777862e-02, 8.726829476815422e-01), (-1.918316266304285e-01, 8.533235183993116e-01), (-4.260741816349806e-01, 7.638201305105398e-01), (-7.946944655621534e-01, 3.652685401645481e-01), (-8.656755621496824e-01, 1.247646629694801e-01)], // N=50
];
