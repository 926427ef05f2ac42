// Built-in Hankel digital filter tables (J0/J1), generated by
// scripts/generate_hankel_filter.py on 2026-08-19.  Spectral sinc-response
// design; abscissas lambda_i = exp(-22.0 + 0.05*i)/r, i = 0..620.
// Do not edit by hand; rerun the script to regenerate.

#include "emsound/hankel.hpp"

namespace emsound {

namespace {

constexpr double kSpacing = 0.05;
constexpr double kOffset = -22.0;

const double kWeightsJ0[621] = {
    +1.39473978823999744e-11, +1.46622974238624117e-11, +1.54142283948544743e-11, +1.62048809709864071e-11,
    +1.70354594659590196e-11, +1.79085008011725511e-11, +1.88266817027933454e-11, +1.97923248021616182e-11,
    +2.08068317523609822e-11, +2.18734144305244941e-11, +2.29952642968687090e-11, +2.41746611718402369e-11,
    +2.54135519874320452e-11, +2.67167302152002212e-11, +2.80867078258290793e-11, +2.95267672056276670e-11,
    +3.10402197872491412e-11, +3.26314533640620787e-11, +3.43048880321771236e-11, +3.60637850260760256e-11,
    +3.79126254180963902e-11, +3.98566719362620793e-11, +4.19002767251669251e-11, +4.40483970026907582e-11,
    +4.63067029728121076e-11, +4.86808357826429118e-11, +5.11770768369368492e-11, +5.38009980692947604e-11,
    +5.65592809821555702e-11, +5.94590796278779569e-11, +6.25077073894448270e-11, +6.57125768120163878e-11,
    +6.90814920788374636e-11, +7.26233578261722757e-11, +7.63478380415020610e-11, +8.02613605768921986e-11,
    +8.43763614217864479e-11, +8.87026130885228181e-11, +9.32504426491696623e-11, +9.80314315708646654e-11,
    +1.03057721296408696e-10, +1.08341573028583376e-10, +1.13896341916315337e-10, +1.19736193938604799e-10,
    +1.25874992167125962e-10, +1.32328646217219545e-10, +1.39113437073373155e-10, +1.46245855545197615e-10,
    +1.53743764043110410e-10, +1.61626570982488050e-10, +1.69913396384160106e-10, +1.78625034397381234e-10,
    +1.87783366574911995e-10, +1.97411058233000723e-10, +2.07532777174811026e-10, +2.18173107294869310e-10,
    +2.29358909821660145e-10, +2.41118454294681946e-10, +2.53480983445627521e-10, +2.66477462831921226e-10,
    +2.80139833792847475e-10, +2.94502873082999679e-10, +3.09602445110105990e-10, +3.25476061254671092e-10,
    +3.42163366280463628e-10, +3.59706441578153597e-10, +3.78149187784365650e-10, +3.97537502829397066e-10,
    +4.17919636727026527e-10, +4.39346876198690870e-10, +4.61872430353113682e-10, +4.85553063982844071e-10,
    +5.10447908775440297e-10, +5.36619185475039116e-10, +5.64132487266426489e-10, +5.93056268117099988e-10,
    +6.23462688279728843e-10, +6.55428288503572796e-10, +6.89032640082755617e-10, +7.24359915296157028e-10,
    +7.61498734116351238e-10, +8.00541989140982841e-10, +8.41587089468987114e-10, +8.84735877389738764e-10,
    +9.30096401306471925e-10, +9.77783456555051258e-10, +1.02791603414458019e-09, +1.08061901789522726e-09,
    +1.13602339861749129e-09, +1.19426807286966691e-09, +1.25549913297660769e-09, +1.31987033467271964e-09,
    +1.38754200610450624e-09, +1.45868249769827890e-09, +1.53347035512287386e-09, +1.61209336140299328e-09,
    +1.69474744255553287e-09, +1.78163872089364121e-09, +1.87298514674831689e-09, +1.96901515192732751e-09,
    +2.06996890026309482e-09, +2.17609857960257761e-09, +2.28766933743667417e-09, +2.40496061063185511e-09,
    +2.52826585906272636e-09, +2.65789280262023839e-09, +2.79416558030148194e-09, +2.93742554088829049e-09,
    +3.08803070523923705e-09, +3.24635743423075118e-09, +3.41280170668903962e-09, +3.58777974943814224e-09,
    +3.77172920888808496e-09, +3.96510995523756676e-09, +4.16840528672772146e-09, +4.38212405077381155e-09,
    +4.60680044836955711e-09, +4.84299609493618674e-09, +5.09130181916663438e-09, +5.35233854060235815e-09,
    +5.62675875493991986e-09, +5.91524882469430533e-09, +6.21853013241487810e-09, +6.53736092001345225e-09,
    +6.87253872428126973e-09, +7.22490129458382912e-09, +7.59532983195296675e-09, +7.98475072092558994e-09,
    +8.39413765858976836e-09, +8.82451419785846605e-09, +9.27695678473581488e-09, +9.75259657217794074e-09,
    +1.02526229397841149e-08, +1.07782860378320739e-08, +1.13309005713960667e-08, +1.19118483498148669e-08,
    +1.25225819966783750e-08, +1.31646283502186062e-08, +1.38395932139397630e-08, +1.45491643876301935e-08,
    +1.52951161040228817e-08, +1.60793133498028574e-08, +1.69037174169931547e-08, +1.77703895299857204e-08,
    +1.86814969294086513e-08, +1.96393176751541199e-08, +2.06462470921842742e-08, +2.17048028744376308e-08,
    +2.28176317960246441e-08, +2.39875166035468025e-08, +2.52173833780765075e-08, +2.65103060590694295e-08,
    +2.78695182907002807e-08, +2.92984193123770721e-08, +3.08005813801090670e-08, +3.23797607612842938e-08,
    +3.40399067986414410e-08, +3.57851700962473947e-08, +3.76199150842834159e-08, +3.95487292484561993e-08,
    +4.15764360446952498e-08, +4.37081054095101821e-08, +4.59490681326543711e-08, +4.83049270283574931e-08,
    +5.07815736039702890e-08, +5.33852005028820534e-08, +5.61223183098316356e-08, +5.89997709969984150e-08,
    +6.20247540061522606e-08, +6.52048311974547782e-08, +6.85479542789117547e-08, +7.20624830544584667e-08,
    +7.57572056691152224e-08, +7.96413606219543238e-08, +8.37246603545079329e-08, +8.80173155887633813e-08,
    +9.25300599702036586e-08, +9.72741774908769622e-08, +1.02261531229558355e-07, +1.07504592150251612e-07,
    +1.13016470377663042e-07, +1.18810948529890048e-07, +1.24902516256519145e-07, +1.31306405230496417e-07,
    +1.38038628562480100e-07, +1.45116020316796206e-07, +1.52556277888454664e-07, +1.60378005557591387e-07,
    +1.68600761706536064e-07, +1.77245107586865018e-07, +1.86332658643826072e-07, +1.95886138292965624e-07,
    +2.05929435375289045e-07, +2.16487663317849664e-07, +2.27587223162388710e-07, +2.39255869512132197e-07,
    +2.51522780180497207e-07, +2.64418629127229098e-07, +2.77975662111221506e-07, +2.92227778887391106e-07,
    +3.07210617618015062e-07, +3.22961642721837721e-07, +3.39520240405986951e-07, +3.56927815320149518e-07,
    +3.75227895720540534e-07, +3.94466241420426161e-07, +4.14690958032497422e-07, +4.35952618105833329e-07,
    +4.58304386780342757e-07, +4.81802155201817321e-07, +5.06504679965103062e-07, +5.32473730110225225e-07,
    +5.59774242152677872e-07, +5.88474481324172668e-07, +6.18646212919951388e-07, +6.50364882568100375e-07,
    +6.83709803535442665e-07, +7.18764354457497295e-07, +7.55616190775735202e-07, +7.94357461625929213e-07,
    +8.35085039407181760e-07, +8.77900764861620666e-07, +9.22911699653347395e-07, +9.70230394388247266e-07,
    +1.01997517036427002e-06, +1.07227041570580929e-06, +1.12724689552595807e-06, +1.18504207967740248e-06,
    +1.24580048641115219e-06, +1.30967404311159988e-06, +1.37682246723835885e-06, +1.44741366461937221e-06,
    +1.52162415005079181e-06, +1.59963948849554031e-06, +1.68165475886858202e-06, +1.76787504203619365e-06,
    +1.85851593351386266e-06, +1.95380408301859695e-06, +2.05397776045218849e-06, +2.15928745197198060e-06,
    +2.26999648675695611e-06, +2.38638169544810618e-06, +2.50873410113442259e-06, +2.63735964893839233e-06,
    +2.77257996953233862e-06, +2.91473318404154602e-06, +3.06417474978736246e-06, +3.22127834841470034e-06,
    +3.38643682062396390e-06, +3.56006314891493085e-06, +3.74259148916416801e-06, +3.93447825741728272e-06,
    +4.13620327067691792e-06, +4.34827094649864216e-06, +4.57121156439389613e-06, +4.80558259206227614e-06,
    +5.05197007884674936e-06, +5.31099012226635291e-06, +5.58329040709136861e-06, +5.86955182570496746e-06,
    +6.17049018088181974e-06, +6.48685797515215699e-06, +6.81944629242855048e-06, +7.16908677677622607e-06,
    +7.53665371190315957e-06, +7.92306620611823650e-06, +8.32929049175334554e-06, +8.75634234073909912e-06,
    +9.20528960533630180e-06, +9.67725488725263352e-06, +1.01734183453452013e-05, +1.06950206460853409e-05,
    +1.12433660666667565e-05, +1.18198257561605794e-05, +1.24258411636730922e-05, +1.30629276421627083e-05,
    +1.37326782395629705e-05, +1.44367676805803989e-05, +1.51769565543526625e-05, +1.59550957178808486e-05,
    +1.67731309232254133e-05, +1.76331076831460393e-05, +1.85371763859609779e-05, +1.94875976725615223e-05,
    +2.04867480891541610e-05, +2.15371260298146842e-05, +2.26413579836918255e-05, +2.38022051028760758e-05,
    +2.50225701052458575e-05, +2.63055045355774300e-05, +2.76542163925402423e-05, +2.90720781525103782e-05,
    +3.05626352016942658e-05, +3.21296147010449924e-05, +3.37769349060815840e-05, +3.55087149649404817e-05,
    +3.73292852171044589e-05, +3.92431980219901867e-05, +4.12552391416959720e-05, +4.33704397074142304e-05,
    +4.55940887995282478e-05, +4.79317466726238080e-05, +5.03892586582029714e-05, +5.29727697806160950e-05,
    +5.56887401218051712e-05, +5.85439609742125229e-05, +6.15455718211321194e-05, +6.47010781879287227e-05,
    +6.80183704085689277e-05, +7.15057433539452800e-05, +7.51719171705655991e-05, +7.90260590840053599e-05,
    +8.30778063189068974e-05, +8.73372901937615115e-05, +9.18151614508599522e-05, +9.65226168847478145e-05,
    +1.01471427334938125e-04, +1.06673967113530671e-04, +1.12143244941296006e-04, +1.17892936467528674e-04,
    +1.23937418458588109e-04, +1.30291804736629402e-04, +1.36971983959573054e-04, +1.43994659337522883e-04,
    +1.51377390383501225e-04, +1.59138636802398783e-04, +1.67297804627553748e-04, +1.75875294721339787e-04,
    +1.84892553758324546e-04, +1.94372127818085707e-04, +2.04337718723667894e-04, +2.14814243261299525e-04,
    +2.25827895432011638e-04, +2.37406211887829856e-04, +2.49578140715397316e-04, +2.62374113736854576e-04,
    +2.75826122507619295e-04, +2.89967798198078187e-04, +3.04834495557154206e-04, +3.20463381164210273e-04,
    +3.36893526186169074e-04, +3.54166003869128647e-04, +3.72323992002342771e-04, +3.91412880605004497e-04,
    +4.11480385100848275e-04, +4.32576665253717890e-04, +4.54754450154700818e-04, +4.78069169563188326e-04,
    +5.02579091918472034e-04, +5.28345469352824453e-04, +5.55432690055716904e-04, +5.83908438349310470e-04,
    +6.13843862856408269e-04, +6.45313753155865480e-04, +6.78396725340309030e-04, +7.13175416906162616e-04,
    +7.49736691425795720e-04, +7.88171853468765658e-04, +8.28576874258911281e-04, +8.71052628571460487e-04,
    +9.15705143392584863e-04, +9.62645858883164713e-04, +1.01199190220556574e-03, +1.06386637478901071e-03,
    +1.11839865362492875e-03, +1.17572470720010312e-03, +1.23598742668580043e-03, +1.29933697301280846e-03,
    +1.36593114047015170e-03, +1.43593573746945654e-03, +1.50952498511576104e-03, +1.58688193421944969e-03,
    +1.66819890137500336e-03, +1.75367792470717122e-03, +1.84353123985936981e-03, +1.93798177675728834e-03,
    +2.03726367762627853e-03, +2.14162283666940751e-03, +2.25131746172867273e-03, +2.36661865813376235e-03,
    +2.48781103481177752e-03, +2.61519333255904500e-03, +2.74907907417141269e-03, +2.88979723588417108e-03,
    +3.03769293927366995e-03, +3.19312816241818734e-03, +3.35648246868892799e-03, +3.52815375104348480e-03,
    +3.70855898909125750e-03, +3.89813501549867228e-03, +4.09733928747108359e-03, +4.30665065806386336e-03,
    +4.52657014093449297e-03, +4.75762166078924197e-03, +5.00035278020333381e-03, +5.25533539164923028e-03,
    +5.52316636140201891e-03, +5.80446810947752960e-03, +6.09988910682829431e-03, +6.41010426759927414e-03,
    +6.73581521027729474e-03, +7.07775035695608259e-03, +7.43666483457934655e-03, +7.81334013581874709e-03,
    +8.20858349005997023e-03, +8.62322688664809468e-03, +9.05812568294663868e-03, +9.51415671867745366e-03,
    +9.99221584523800159e-03, +1.04932147640045270e-02, +1.10180770507430914e-02, +1.15677332238985631e-02,
    +1.21431146923759725e-02, +1.27451463931237997e-02, +1.33747379000047142e-02, +1.40327727526794663e-02,
    +1.47200957171346441e-02, +1.54374976476064768e-02, +1.61856975725905884e-02, +1.69653215749722280e-02,
    +1.77768779777514388e-02, +1.86207282821200595e-02, +1.94970532337199395e-02, +2.04058133159294060e-02,
    +2.13467028864918161e-02, +2.23190970866822373e-02, +2.33219905621408381e-02, +2.43539269439480496e-02,
    +2.54129179511478551e-02, +2.64963508968921596e-02, +2.76008833168531302e-02, +2.87223234002350510e-02,
    +2.98554949036323701e-02, +3.09940852832589903e-02, +3.21304759141108828e-02, +3.32555535042816305e-02,
    +3.43585021957946990e-02, +3.54265764165322614e-02, +3.64448553694073363e-02, +3.73959811867453501e-02,
    +3.82598843278915551e-02, +3.90135018622978710e-02, +3.96304969829997106e-02, +4.00809915828518326e-02,
    +4.03313281622409425e-02, +4.03438828938016553e-02, +4.00769585457090363e-02, +3.94847943266969717e-02,
    +3.85177396682307230e-02, +3.71226506893643643e-02, +3.52435813904116227e-02, +3.28228561229082921e-02,
    +2.98026257400402263e-02, +2.61270245646624925e-02, +2.17450577100049558e-02, +1.66143591870964794e-02,
    +1.07059567866530005e-02, +4.01016465059895241e-03, -3.45629942862364084e-03, -1.16419712400324046e-02,
    -2.04511644877208645e-02, -2.97335835691466856e-02, -3.92736425090389613e-02, -4.87802554834246213e-02,
    -5.78782668929712155e-02, -6.61038523087543323e-02, -7.29056835019218780e-02, -7.76550151016666967e-02,
    -7.96702266367474710e-02, -7.82563450077901207e-02, -7.27661403806410811e-02, -6.26900255293171144e-02,
    -4.77609123642815034e-02, -2.80885924632222339e-02, -4.31399991127931568e-03, +2.22802668316540442e-02,
    +4.96522772684855757e-02, +7.49742074792431740e-02, +9.48378951371832007e-02, +1.05472155728379716e-01,
    +1.03343756980984691e-01, +8.61526482763286805e-02, +5.34569654847966147e-02, +7.99235730116430385e-03,
    -4.34418549647784674e-02, -9.10655011887082505e-02, -1.22163624294137213e-01, -1.24434810811546212e-01,
    -9.22286513213189940e-02, -2.75497081175200623e-02, +5.35803753936612767e-02, +1.20758278807193323e-01,
    +1.45657154574870634e-01, +1.06066376193966513e-01, +6.38659043126486078e-03, -1.02054416728633787e-01,
    -1.60696112249600065e-01, -1.19926217372754440e-01, +2.07715543701315723e-02, +1.49291687334091289e-01,
    +1.57400406568563911e-01, +2.48153980259640979e-02, -1.61861504406181744e-01, -1.66681596622230727e-01,
    +4.72290786144804187e-02, +1.86741781782508359e-01, +8.16509309373754655e-02, -1.66818145947475682e-01,
    -1.62888351766067835e-01, +1.93457601481754310e-01, +1.43949159299188445e-01, -2.40696618966993597e-01,
    -1.88962379527136785e-02, +2.09329527041222124e-01, -1.15062340411136069e-01, -7.48291993835876884e-02,
    +1.36193705303123996e-01, -5.62566623325225154e-02, -4.46784150850246739e-02, +7.68766357937370470e-02,
    -4.06300722800551559e-02, -1.30055078671549237e-02, +4.01733883437308328e-02, -3.13388715523985131e-02,
    +4.39882939577247722e-03, +1.70072671965763346e-02, -2.07199360174647428e-02, +9.96830116060033571e-03,
    +3.76594542126813814e-03, -1.07736586565899874e-02, +8.76234012077144360e-03, -1.92877029932983783e-03,
    -3.83833128792250913e-03, +5.28134672382379790e-03, -2.97565295495027561e-03, -3.39417076625353584e-04,
    +2.25211324157932775e-03, -2.09263306944651927e-03, +7.28741711532336070e-04, +5.47821928712275796e-04,
    -9.93020204572071146e-04, +6.66275660566522949e-04, -7.78975288293629666e-05, -3.09377491317937672e-04,
    +3.47984928034725640e-04, -1.65078635124789628e-04, -3.29365517651361624e-05, +1.21628655224237316e-04,
    -9.83829830407353018e-05, +2.89864317099001789e-05, +2.38518481718427872e-05, -3.70895372068079043e-05,
    +2.23836507176432778e-05, -2.24553228141835554e-06, -8.84244243839872914e-06, +9.09073043316604198e-06,
    -4.01646765336585966e-06, -6.22264238369792809e-07, +2.38016677748589131e-06, -1.81482833491979779e-06,
    +5.36233022258637681e-07, +3.21079266637758844e-07, -5.04191508836222353e-07, +2.95702241165046074e-07,
    -4.28740419374736731e-08, -8.35735536728245918e-08, +8.66889848653278641e-08, -3.90199256506901482e-08,
    -1.28856745789965554e-09, +1.57834135022320221e-08, -1.22697596618960867e-08, +4.07418243598331620e-09,
    +1.16063979610482032e-09, -2.35157990011500688e-09, +1.43837526956367295e-09, -3.16191465673239439e-10,
    -2.37760456213490217e-10, +2.85708722374303014e-10, -1.39781850294601282e-10, +1.43861345150497850e-11,
    +3.29045626051988120e-11, -2.87750938442931062e-11, +1.12127663132330092e-11, +3.56906874004008863e-13,
    -3.52332893295593368e-12, +2.42434202223988823e-12, -7.33705742442103937e-13, -1.52244931990586187e-13,
    +3.05893604645185635e-13, -1.71779768755058044e-13, +3.80695012898693161e-14, +1.82764649870713628e-14,
    -2.19545717969704943e-14, +1.02595117523464335e-14, -1.46306586362186915e-15, -1.50747728751776898e-15,
    +1.28593327270347935e-15, -5.33790182172938771e-16, +5.16759716561982363e-17, +6.84605595291771250e-17,
    -5.43671572974728523e-17, +5.97524772843762093e-18, +4.02373179598132697e-17, -3.90499009145171634e-18,
    +4.46639954475205203e-18, +5.49515658193105723e-17, +9.16605731212384300e-18, +9.11027870965515417e-19,
    +4.73846666708531916e-17, +9.28762918794753382e-18, -6.76576349574185143e-17, +6.79890472448570118e-17,
    -5.17259362646379145e-17, -1.77452912346152424e-17, +4.61012750159449232e-17, -1.10476312554117124e-17,
    -2.39331409694401550e-17, +6.58646379354737417e-17, -3.20970181456619567e-17, -6.80897814723014744e-17,
    +3.63049009565293017e-17
};

const double kWeightsJ1[621] = {
    +2.37068619009239836e-16, -4.23990611286959392e-17, -3.69604724363407657e-16, +4.66026042964972169e-18,
    +3.47025658713555300e-16, +1.52081925685072026e-16, -3.18861252907368378e-17, -4.45034093749838883e-17,
    +2.54816857372926135e-16, +3.73359340347777455e-18, -4.21576546959322939e-16, -6.71211584087217207e-17,
    +1.92246969793097829e-16, -8.26189070723763872e-17, +2.89246490817055134e-17, +1.99081526753063077e-16,
    +2.17229502116606794e-16, -7.59351889123673065e-17, -2.41917837004494367e-16, +5.36078467043864237e-18,
    -1.55503550084557281e-17, -1.31102631076877271e-16, -7.71552775152487604e-18, +1.67377916898306600e-16,
    +2.42374937486668114e-17, -1.16460370995234196e-16, -2.68495584549461057e-16, -3.98236718841327327e-17,
    +1.28307626370670072e-16, +1.89607129588401925e-17, -1.80723842343755181e-16, +1.73760971832645353e-16,
    +1.83222956184278181e-16, -2.12702172756497471e-16, -3.55820341621700480e-16, +7.82223949765833096e-17,
    -2.98893512623722635e-17, +4.95426163708844384e-17, +8.60113727937104334e-17, -8.66214856149887700e-17,
    -5.87803618693978792e-17, -2.82599904376602992e-17, -1.82088530671131979e-16, -6.40341624028764422e-18,
    +1.03425324912280556e-16, +7.64308818258693642e-19, -9.77023273467281003e-17, +2.19917933271145046e-16,
    -1.14738155100154142e-17, -1.31816890994167560e-16, -1.67680497038239608e-16, -6.19918519077080313e-17,
    +2.29793741144628299e-16, -8.35891677268524056e-17, -6.40769410199601299e-17, +1.96762197783037712e-16,
    +9.67955442070037662e-17, -2.65434987320532167e-16, +7.15075116179990584e-18, +6.93564157812845901e-18,
    -5.46484966648402171e-17, -8.91322879650479626e-18, +9.73715782006393961e-18, +8.66509029714303502e-17,
    +1.58305835968647397e-16, -1.24664866956136908e-16, -2.02002001216297410e-16, +9.80848795558932306e-18,
    +4.88184946119813014e-17, +1.21178818123009008e-16, +1.05961878382958275e-16, +3.53810032990612090e-17,
    -3.60303231022288155e-17, -1.69644088394736181e-16, -2.46563708470196391e-16, +3.20632075486758725e-17,
    +2.57639760720933597e-16, +1.18641674066537203e-16, +5.80018474126815593e-17, +8.10963808262813233e-17,
    -2.31663115876763117e-16, -4.31504568380736061e-16, -7.29081785394466820e-17, +5.34229125635691792e-16,
    +5.76662688042700701e-16, -1.39122770079012998e-16, -8.05101506111762709e-16, -2.23821061083993356e-16,
    +3.59347564294756040e-16, +4.13099988950526617e-16, +1.21428885335641369e-16, -4.05918789925496691e-16,
    -1.25176005168794293e-16, +4.29083364456324113e-16, +3.06064386741426237e-17, -2.24347423967266155e-16,
    -5.60802662187699755e-17, +6.28977553434952741e-18, +8.41039190576578587e-17, +1.20101853274579644e-16,
    -1.48094356551962875e-16, -5.28797336535365608e-17, +1.68845772306326384e-16, -3.76693706965302152e-17,
    -1.40659124710340764e-16, +2.22913190968530262e-16, +2.28384213378609321e-16, -2.87833792722037738e-17,
    -1.32173222691439406e-16, +1.62356802133791266e-16, +2.41509638411150093e-16, +1.11443116708989274e-16,
    +1.82295863088137200e-16, +3.01038807577888008e-16, +1.85225709895122952e-16, +9.76058709578601562e-17,
    +2.48723446293777784e-16, +2.59959831029939134e-16, +1.83014244687863532e-16, +2.89380574860232707e-16,
    +3.68394055256359152e-16, +3.79406623722315274e-16, +3.42126624759484855e-16, +3.75673808333041557e-16,
    +4.59124924182815492e-16, +5.94281384079548529e-16, +6.01709832039886523e-16, +6.41030677485785182e-16,
    +7.66852972448679849e-16, +8.34222666776642543e-16, +8.02262089067208033e-16, +9.05374820025877081e-16,
    +1.08696786250750303e-15, +1.17485282416786873e-15, +1.29567572430133623e-15, +1.40216501067949695e-15,
    +1.56430936598607681e-15, +1.77912007759570972e-15, +1.86452683608300281e-15, +2.11837317246077228e-15,
    +2.36329081499207791e-15, +2.61142711548916125e-15, +2.81507350200145053e-15, +3.16824820074932486e-15,
    +3.55352196927977615e-15, +3.77894463501902080e-15, +4.15894991383834422e-15, +4.73823096694666526e-15,
    +5.36754714113176370e-15, +5.64462278954053122e-15, +6.14028912313052389e-15, +7.20109960807555280e-15,
    +7.74497791278823071e-15, +8.43161808432623063e-15, +9.64739770207309506e-15, +1.04447284641802227e-14,
    +1.15533667616654558e-14, +1.29852620056949552e-14, +1.44682773431411508e-14, +1.55396850707254436e-14,
    +1.73973219406507216e-14, +1.91571129657358357e-14, +2.13145868352487512e-14, +2.33593770775237272e-14,
    +2.58286484423558345e-14, +2.84692700445865158e-14, +3.15645118084926575e-14, +3.47067521418625248e-14,
    +3.84327110265358210e-14, +4.26007627203773259e-14, +4.70372537997254036e-14, +5.19049209533590809e-14,
    +5.73254314158817667e-14, +6.34895083648031118e-14, +7.01901477032611104e-14, +7.74269453961239340e-14,
    +8.56749840531681282e-14, +9.45711252512452191e-14, +1.04556981507878122e-13, +1.15602494576467112e-13,
    +1.27723469470712227e-13, +1.41338622088656318e-13, +1.56058746771399442e-13, +1.72393906750788359e-13,
    +1.90602498609002444e-13, +2.10640185918083425e-13, +2.32684158323923045e-13, +2.57172198543444156e-13,
    +2.84216511153918277e-13, +3.14139036699831966e-13, +3.47232780526723517e-13, +3.83740071262339349e-13,
    +4.24102494651639395e-13, +4.68661934499363303e-13, +5.17963256213572456e-13, +5.72349250384434665e-13,
    +6.32671572671091837e-13, +6.99163203017622882e-13, +7.72675967742078294e-13, +8.53953527007540111e-13,
    +9.43714834381909350e-13, +1.04303226592292017e-12, +1.15281295920333963e-12, +1.27396925660205769e-12,
    +1.40800355647438717e-12, +1.55610373760073139e-12, +1.71968856095740377e-12, +1.90059905159784804e-12,
    +2.10042524885176411e-12, +2.32117241298994747e-12, +2.56550388746946636e-12, +2.83537066547301783e-12,
    +3.13326559989977818e-12, +3.46307917836955632e-12, +3.82733300062345722e-12, +4.22952469669769368e-12,
    +4.67456058269415391e-12, +5.16648708149793958e-12, +5.70953205062940708e-12, +6.30997911176553877e-12,
    +6.97384355474671226e-12, +7.70714509309122105e-12, +8.51756873342191325e-12, +9.41350774875433088e-12,
    +1.04035279186579475e-11, +1.14976398730529309e-11, +1.27068732392531582e-11, +1.40432131359048675e-11,
    +1.55202122957759940e-11, +1.71524664421505995e-11, +1.89563632748084981e-11, +2.09500890363244304e-11,
    +2.31534320617598113e-11, +2.55884953971636199e-11, +2.82795855619152004e-11, +3.12537494596367962e-11,
    +3.45408236402206765e-11, +3.81734464755179078e-11, +4.21882161119471436e-11, +4.66252496153905831e-11,
    +5.15290865103670624e-11, +5.69482310210484453e-11, +6.29374778901944969e-11, +6.95566288122149720e-11,
    +7.68719993164181417e-11, +8.49566731297396685e-11, +9.38915509424372850e-11, +1.03766347528366345e-10,
    +1.14679633677688474e-10, +1.26740488669687069e-10, +1.40069950384316046e-10, +1.54801216252951471e-10,
    +1.71081689173757125e-10, +1.89074555895269932e-10, +2.08959747620651951e-10, +2.30936303344180803e-10,
    +2.55224076979317660e-10, +2.82066173420018297e-10, +3.11731341353825303e-10, +3.44516272885517509e-10,
    +3.80749258345177896e-10, +4.20793309292436644e-10, +4.65048738662485483e-10, +5.13958095808826968e-10,
    +5.68011342450080808e-10, +6.27749730099440826e-10, +6.93771008050612014e-10, +7.66735404266563647e-10,
    +8.47373544989731187e-10, +9.36492598304805150e-10, +1.03498447191667275e-09, +1.14383476458305858e-09,
    +1.26413282038907289e-09, +1.39708272272054783e-09, +1.54401533952964208e-09, +1.70640089122205064e-09,
    +1.88586462210811388e-09, +2.08420265834357802e-09, +2.30340016161792849e-09, +2.54565090424305653e-09,
    +2.81337932655142423e-09, +3.10926503742172000e-09, +3.43626919690499984e-09, +3.79766483900936720e-09,
    +4.19706873220438773e-09, +4.63847826259668786e-09, +5.12631133048589104e-09, +5.66545000607688001e-09,
    +6.26129071560043177e-09, +6.91979632678878975e-09, +7.64755769457714918e-09, +8.45185837580879664e-09,
    +9.34074800879082372e-09, +1.03231229388919946e-08, +1.14088152336557776e-08, +1.26086907819738514e-08,
    +1.39347583396977652e-08, +1.54002894431321967e-08, +1.70199518780427048e-08, +1.88099557527016638e-08,
    +2.07882158369852667e-08, +2.29745313315232610e-08, +2.53907835611605179e-08, +2.80611552511547372e-08,
    +3.10123721654435402e-08, +3.42739712258668349e-08, +3.78785955910141729e-08, +4.18623214802363485e-08,
    +4.62650191693000954e-08, +5.11307525788161364e-08, +5.65082192667352999e-08, +6.24512386532175129e-08,
    +6.90192905021379897e-08, +7.62781098667214223e-08, +8.43003453165507853e-08, +9.31662859436634619e-08,
    +1.02964664731268631e-07, +1.13793546757180699e-07, +1.25761311021621337e-07, +1.38987734436110704e-07,
    +1.53605190874794564e-07, +1.69759976081415746e-07, +1.87613771840727334e-07, +2.07345264050567986e-07,
    +2.29151930883282937e-07, +2.53252019251574277e-07, +2.79886729430068425e-07, +3.09322628148459965e-07,
    +3.41854317361203115e-07, +3.77807381782373677e-07, +4.17541648067446495e-07, +4.61454785183267688e-07,
    +5.09986284853777549e-07, +5.63621859482576568e-07, +6.22898303233450523e-07, +6.88408864193328087e-07,
    +7.60809181027021345e-07, +8.40823844681940775e-07, +9.29253649536619448e-07, +1.02698360710099323e-06,
    +1.13499180297321910e-06, +1.25435918428374351e-06, +1.38628037686206962e-06, +1.53207563988929539e-06,
    +1.69320407732876759e-06, +1.87127823859357679e-06, +2.06808025381238802e-06, +2.28557966708491317e-06,
    +2.52595314308293935e-06, +2.79160624607199027e-06, +3.08519750862406929e-06, +3.40966503130042103e-06,
    +3.76825587644246335e-06, +4.16455855397207937e-06, +4.60253892082167122e-06, +5.08657985324660031e-06,
    +5.62152508935267333e-06, +6.21272767783072858e-06, +6.86610351894197057e-06, +7.58819053051017874e-06,
    +8.38621403003921649e-06, +9.26815898449004914e-06, +1.02428498498253712e-05, +1.13200387952983287e-05,
    +1.25105031909867187e-05, +1.38261533309360313e-05, +1.52801514643771321e-05, +1.68870433180078038e-05,
    +1.86629034187572042e-05, +2.06254956605539486e-05, +2.27944507102941518e-05, +2.51914620111307892e-05,
    +2.78405023288939599e-05, +3.07680629843418708e-05, +3.40034181377378398e-05, +3.75789167375727878e-05,
    +4.15303050124096406e-05, +4.58970826843745698e-05, +5.07228964059033968e-05, +5.60559742823961383e-05,
    +6.19496057360228769e-05, +6.84626714024028137e-05, +7.56602282233623859e-05, +8.36141554238071280e-05,
    +9.24038676328760701e-05, +1.02117102033450372e-04, +1.12850787112820402e-04, +1.24712001334737897e-04,
    +1.37819030866902312e-04, +1.52302536395741754e-04, +1.68306840022067487e-04, +1.85991344282876908e-04,
    +2.05532096488328852e-04, +2.27123512787454724e-04, +2.50980277701107863e-04, +2.77339436287299835e-04,
    +3.06462697619051198e-04, +3.38638969874849750e-04, +3.74187149051225030e-04, +4.13459185108397875e-04,
    +4.56843451228620566e-04, +5.04768443804898596e-04, +5.57706842740864983e-04, +6.16179963617277671e-04,
    +6.80762635205022491e-04, +7.52088537635957279e-04, +8.30856038192729837e-04, +9.17834563057668166e-04,
    +1.01387154434119295e-03, +1.11989998213129767e-03, +1.23694666097256428e-03, +1.36614105884413526e-03,
    +1.50872498405053780e-03, +1.66606297108260934e-03, +1.83965345997534981e-03, +2.03114077439042404e-03,
    +2.24232790088314555e-03, +2.47519005468550520e-03, +2.73188899479239475e-03, +3.01478802188616434e-03,
    +3.32646755511474589e-03, +3.66974113607450737e-03, +4.04767164830404768e-03, +4.46358746548176314e-03,
    +4.92109814817435869e-03, +5.42410919365917798e-03, +5.97683520166125259e-03, +6.58381064570833386e-03,
    +7.24989722935834562e-03, +7.98028655210144752e-03, +8.78049650378934406e-03, +9.65635944070167632e-03,
    +1.06139997618785679e-02, +1.16597979917650967e-02, +1.28003378751695811e-02, +1.40423322943276259e-02,
    +1.53925230184842020e-02, +1.68575483899265285e-02, +1.84437720382276474e-02, +2.01570646060991142e-02,
    +2.20025292872553409e-02, +2.39841607587266761e-02, +2.61044259011384214e-02, +2.83637536376306308e-02,
    +3.07599204338170097e-02, +3.32873176895140122e-02, +3.59360876987948677e-02, +3.86911164768031848e-02,
    +4.15308750176983932e-02, +4.44261061374452218e-02, +4.73383630030736816e-02, +5.02184183993265726e-02,
    +5.30045823916771019e-02, +5.56209925200917207e-02, +5.79759738322697532e-02, +5.99606117848454495e-02,
    +6.14477413309988535e-02, +6.22916169143499440e-02, +6.23286215716995981e-02, +6.13794756345331025e-02,
    +5.92534608012931993e-02, +5.57553501658780704e-02, +5.06957876337558455e-02, +4.39057165549382317e-02,
    +3.52558405870156133e-02, +2.46814931156762035e-02, +1.22125090375918791e-02, -1.99110345625642818e-03,
    -1.76008412375167136e-02, -3.40827905965763803e-02, -5.06621791340815669e-02, -6.63059184036506599e-02,
    -7.97307426489323318e-02, -8.94360638143944231e-02, -9.38130959604051989e-02, -9.13106733996016384e-02,
    -8.06484831695960663e-02, -6.11916497480569296e-02, -3.32922907453509984e-02, +1.39178553565280118e-03,
    +3.94329519015330990e-02, +7.57725771334136211e-02, +1.04069648843432436e-01, +1.17154012512708142e-01,
    +1.09293592343582269e-01, +7.78412267614410486e-02, +2.47834151866256451e-02, -3.96230200144818551e-02,
    -9.91404609955109373e-02, -1.34623507357033739e-01, -1.26423529963426151e-01, -7.00917138284558039e-02,
    +1.95193926223125834e-02, +1.11555749943351212e-01, +1.54150124424214940e-01, +1.14575115432740099e-01,
    +6.49940768129813728e-03, -1.21978622509515675e-01, -1.70659054828335627e-01, -8.03898035911640024e-02,
    +7.65645417924754462e-02, +1.82502414733437479e-01, +1.07271431772111639e-01, -1.15289843343262768e-01,
    -1.88258311234860837e-01, -1.61494256128817543e-02, +1.76006226567593738e-01, +1.28613164046307599e-01,
    -1.75481939988129887e-01, -1.65499327389132561e-01, +2.22737334016862604e-01, +8.76569193470058683e-02,
    -2.40205044417143632e-01, +5.87132651814629147e-02, +1.49281238785417825e-01, -1.44740887191714740e-01,
    +1.71231400553166274e-03, +9.77379902381270982e-02, -8.28453607014992544e-02, +7.44716507032916301e-03,
    +4.85409669012277917e-02, -5.11071398731111973e-02, +1.71704698626381699e-02, +1.75998682247704361e-02,
    -2.96672000598903057e-02, +1.84860587524593792e-02, +1.20408432421976195e-03, -1.39867764295833370e-02,
    +1.38543953349774974e-02, -4.99889634551975957e-03, -4.16162745067045342e-03, +7.73816565969890052e-03,
    -5.31794713084455563e-03, +4.26575897984840188e-04, +3.03890422983704982e-03, -3.42056649324153344e-03,
    +1.57903475182823963e-03, +5.41966997262196930e-04, -1.53581489459990385e-03, +1.22241310309365633e-03,
    -3.00010370512314971e-04, -4.29964105639494621e-04, +6.03992686123169483e-04, -3.47187631199905326e-04,
    -4.35103923669971948e-06, +1.99500682541700727e-04, -1.90644680567932914e-04, +7.44508199419592257e-05,
    +3.12477902331861733e-05, -6.89157986545441641e-05, +4.85848086694799317e-05, -1.01345254691555619e-05,
    -1.50423920522804371e-05, +1.88554901970691730e-05, -9.90018823330341533e-06, -5.13699915156713851e-08,
    +4.70736581445323028e-06, -4.17988233068889577e-06, +1.56104951818310080e-06, +4.98504412909755089e-07,
    -1.12238937343774592e-06, +7.56409111989858464e-07, -1.72477050038435059e-07, -1.69398623074402900e-07,
    +2.14330184263080300e-07, -1.11495933876192907e-07, +7.70294531012593510e-09, +3.72059536044544942e-08,
    -3.34848587328250658e-08, +1.32080092904446970e-08, +1.76156057728412861e-09, -6.23080590706189881e-09,
    +4.32235636386473906e-09, -1.21342065239181728e-09, -5.47797898607711992e-10, +8.38542986613094468e-10,
    -4.62659316588418574e-10, +7.77948820012147900e-11, +9.05714313257914780e-11, -9.28469153997722581e-11,
    +4.10112843764634293e-11, -1.87366880627694754e-12, -1.09909334725836123e-11, +8.56376677956472323e-12,
    -2.98919591018711081e-12, -3.07401081261710988e-13, +1.05940663074298120e-12, -6.62586403329940409e-13,
    +1.76133485560674571e-13, +5.45468614613470514e-14, -8.38014493111084185e-14, +4.32181923611277759e-14,
    -8.03494597566345102e-15, -5.34602280053282302e-15, +5.49575924292382630e-15, -2.39212303798013324e-15,
    +2.68049744716293358e-16, +3.93321268382308252e-16, -3.26289612393167914e-16, +1.15993829194358656e-16,
    +2.98944378335958843e-17, -4.33221988909795132e-17, -3.99571897969915092e-17, -1.11031770013257008e-17,
    +3.80217317780815918e-19, -8.49471924744919996e-18, +2.95279296908626536e-18, +8.21678017361672331e-18,
    -1.01461110831012293e-16, -4.35958902786076291e-17, -6.78686828591382117e-18, -2.19751889610400342e-17,
    -5.96408458974504704e-17, +1.19176678349910043e-17, +1.88050765714274585e-17, +9.31319540613184212e-18,
    +3.72606560757949151e-17, -5.57177828107214401e-17, +2.93007913689796099e-18, +5.67300691883845120e-17,
    -1.92973876593575629e-17
};

}  // namespace

const HankelFilter& builtin_j0_filter() {
  static const HankelFilter filter{
      0, kSpacing, kOffset,
      std::vector<double>(kWeightsJ0, kWeightsJ0 + 621),
      "sinc-spectral-621pt-j0"};
  return filter;
}

const HankelFilter& builtin_j1_filter() {
  static const HankelFilter filter{
      1, kSpacing, kOffset,
      std::vector<double>(kWeightsJ1, kWeightsJ1 + 621),
      "sinc-spectral-621pt-j1"};
  return filter;
}

}  // namespace emsound
