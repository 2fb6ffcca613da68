#include "graffiti/wordlist.hpp"

namespace graffiti {

// Bundled title dictionary: 10000 lowercase pseudo-words.
static const char* const kWords[] = {
    "baickjeet", "baickmon", "baihaickkroat", "baikloushci", "baildoundblend", "bailgriolpeend", "bailjeth", "baimclaith",
    "baindiosjou", "bainqueas", "bairncait", "bairndrand", "bairndro", "bairngleam", "bairpriot", "bairspish",
    "bairstair", "baisheer", "baishji", "baishtash", "baistcluchiorn", "baistcrour", "baistdraist", "baistjoum",
    "baistproarn", "balteasbrist", "bammais", "banbleeck", "bandacksloath", "bandris", "bandsmathpoa", "bankroa",
    "barnflish", "barnprithsmiol", "barnwoack", "bashcraish", "bashfoassnais", "bashlothgloal", "bashthil", "baskees",
    "baspend", "basroand", "bastsnil", "batblust", "batem", "bathnur", "bathoust", "bathpou",
    "bathstrock", "batkrelblam", "bavoarsneath", "beackbloam", "beagoat", "bealwou", "beamhemsneend", "beamstoal",
    "beanpost", "bearklath", "bearngoathseth", "bearnpem", "bearnplam", "bearvaist", "beasbiorntiond", "beascrios",
    "beasfoal", "beashriol", "beashsliorn", "beashsnaish", "beastbreas", "beastshospush", "beatbreashskun", "beatgor",
    "beathkleel", "beatkoat", "beazeth", "becheestfou", "becknoarnglaim", "beckrees", "becksnen", "beeckklaick",
    "beecklail", "beecklirn", "beecktroat", "beelgrist", "beelsmarn", "beemkul", "beendben", "beendkraick",
    "beendstroand", "beenheesttro", "beenkleand", "beenklul", "beensnund", "beepeend", "beepoack", "beerliotvit",
    "beernclaiflirn", "beerndio", "beerngelnearn", "beertroutbror", "beeshcrish", "beeshsai", "beeskrurn", "beestrioth",
    "beetbern", "beetdrorn", "beetflack", "beethfarn", "beethfish", "beethgrarnrar", "beethkeal", "beetstou",
    "belrush", "bemklaith", "bemstack", "bendcloumlouth", "bendpaineand", "benduthast", "benzoush", "bepous",
    "berfreend", "berlaiveal", "bernhel", "bernslas", "bescoam", "besfend", "bestfrost", "bestmickglea",
    "bestpral", "bethfait", "betraick", "betshaim", "bigin", "bilhand", "bimgloshfrearn", "bimsteack",
    "bincrain", "binddre", "bindpret", "binkash", "biokoa", "biokreemstroun", "biomgion", "biondbicktrun",
    "biondcre", "biondqueash", "bionkait", "bioquun", "biorpos", "biortresh", "bioshclush", "bioshcril",
    "bioshspol", "biosnem", "biosnind", "biostkriock", "biostwal", "biothbriorn", "birbleal", "bireebloack",
    "birtreast", "bisbriond", "bisfain", "bishflur", "bistquinhoush", "biststroal", "bistushspeend", "bitgen",
    "bithmut", "bithsist", "bitnoash", "blackgeer", "blacksoan", "blackstrous", "blahoash", "blaickshair",
    "blaickstriock", "blaifreeckbait", "blailchoack", "blailstund", "blaimbrar", "blaimhiom", "blaimnoackfrel", "blaindglotpen",
    "blaindzoto", "blainjiorprost", "blainpios", "blairnpash", "blairnsneas", "blaiscrorn", "blaisgen", "blaistcutvun",
    "blaistplesh", "blaistwairn", "blaisvanstos", "blaisveest", "blaitbrost", "blaithclin", "blaithsheand", "blakrourn",
    "blalzis", "blameelcest", "blamfur", "blamthur", "blanroustpres", "blarnbrash", "blarnshaith", "blashfraick",
    "blasmais", "blasralskoas", "blasthasslaith", "blasthe", "blastsnor", "blathdroash", "blathtreern", "blatwast",
    "blatzeack", "bleaclon", "blealflaist", "bleamkreck", "bleammishcheet", "bleamroul", "bleanfeehout", "bleanwear",
    "blearzear", "bleashblourn", "bleashfioscuck", "bleaslu", "bleasskishglor", "bleaststail", "bleatflees", "bleathcrim",
    "bleathmorbris", "bleathrin", "bleathtrurn", "bleatvun", "bleeckdamfaind", "bleecksheewush", "bleedom", "bleeldesh",
    "bleemquend", "bleendskior", "bleenfril", "bleenfros", "bleenstrin", "bleernclumglil", "bleerncrous", "bleersmut",
    "bleeshceeth", "bleeslon", "bleesmor", "bleesthist", "bleesthum", "bleestklest", "bleestpoam", "bleestsmock",
    "bleestsmour", "bleetkloanclee", "bleetpleer", "bleflear", "blemsturn", "blemtond", "blendais", "blendlios",
    "blendsliorn", "blerkrut", "blerquo", "blestplaith", "bletbingleat", "bletdroushjum", "blethhom", "bletmucknaim",
    "blickshorjir", "bliclouck", "blilgeethcis", "blilkleenshoth", "blilquoath", "blimcriolosh", "bliockcatclat", "bliockzolzoa",
    "bliodosh", "bliograrpem", "bliomblealzior", "bliondtrurn", "bliorful", "bliornbloand", "bliorngouth", "bliornshar",
    "bliosfearnjio", "bliosfiombir", "blioshtot", "bliospround", "bliossloa", "bliostkland", "bliostsoas", "bliotat",
    "bliotbro", "bliothlack", "bliothtriot", "blirnbrem", "blirnuthsnee", "blishciorn", "blishprearn", "bliskiot",
    "blisshaim", "blissneen", "blissneend", "blisttheash", "blitgloan", "blithslaim", "bloackgleack", "bloacknaist",
    "bloacknustviot", "bloackrio", "bloacksneth", "bloalzeat", "bloamsmeesh", "bloandpeeck", "bloandro", "bloandsnust",
    "bloanplem", "bloarleash", "bloasblurn", "bloaspum", "bloastshouck", "bloasttheesh", "bloathklel", "bloatqueel",
    "bloatstiot", "bloawournslash", "blolpror", "blolskisklior", "blolstreel", "blomtrernsmith", "blondbrock", "blopath",
    "blopound", "blorclen", "blormaind", "blornsish", "bloshbroth", "bloshzim", "blostund", "blothboack",
    "blothmou", "blotmeend", "blotshusfleern", "bloubroul", "blouckspoal", "blouldrash", "bloulpriomzur", "bloulspiost",
    "bloundklith", "blounglaick", "blounquesh", "blournfreer", "blourngeath", "blourskuck", "bloursteesh", "bloushboand",
    "bloushtat", "blouskeel", "bloutfut", "blouthzeer", "bluckchish", "blulquem", "blulthith", "blumspeeth",
    "blundsmelblous", "blundsti", "blunsmaitrith", "blunthaick", "blurcrailcion", "blurnrind", "blurstio", "blurthai",
    "blusgan", "blusgoat", "blushsoawouck", "blushsouck", "bluthbloum", "bluthquur", "blutwondquash", "boalbroat",
    "boalfloarn", "boalgern", "boamros", "boandbeash", "boandeem", "boandjait", "boandkreck", "boandthair",
    "boangram", "boankoam", "boarfer", "boarndumstoush", "boarsmashjaind", "boarteack", "boashcloath", "boashkriot",
    "boashrim", "boashthios", "boaspret", "boastbout", "boastshain", "boastskurn", "boathcheereand", "boathdriock",
    "boaththel", "boatnethfa", "boazoa", "bobraith", "bolspurn", "bomtios", "bonshern", "borngrol",
    "bornjund", "borsnail", "boscriosh", "bosdreat", "boshfroam", "bosstiost", "bostfen", "bosttoast",
    "botpoack", "botsloush", "bouckbais", "bouckhoar", "boulceeck", "boulpre", "boulsheshkock", "boultriosh",
    "boultrol", "boumtheet", "boundblan", "boundgren", "boundmil", "bounjuquaind", "bounper", "bounstund",
    "bournglit", "boursnoand", "bousnais", "bouspas", "boustheern", "boustmu", "boutnas", "brackbreast",
    "brackgreern", "braickhis", "braickjeck", "brailhoarncir", "brailspon", "brairsonzen", "brairtriost", "braishtrir",
    "braistbeal", "braistdearchen", "braistgurpliom", "braitcleam", "brajoust", "bralstriol", "bramsmaim", "branfram",
    "brarncloarn", "brarnglouck", "brarnsmeckslou", "brarsneen", "brasboushflind", "brashclir", "brastrucktind", "brasvioth",
    "bratbloth", "brathclind", "brathfrun", "bratmoun", "bratnol", "breackgruth", "breacouthkler", "breadrern",
    "breakre", "breamjou", "breamrul", "breamspom", "breandblin", "brearnjirn", "brearquend", "brearwour",
    "breasbro", "breasclee", "breashthist", "breastcleeth", "breathmat", "breckdrio", "breckjaith", "brecksloa",
    "breedreem", "breendfourn", "breenzoarnplur", "breepouck", "breergreck", "breerstrou", "breesbriorn", "breeshrost",
    "breestloujes", "breetdoarnpim", "breethcurn", "breethjith", "breethtrea", "bregrorn", "brelgrand", "brelvoucktream",
    "bremdraishtoum", "brendoal", "brendshirnpout", "brenskeem", "brerfick", "brerhith", "brernchulkoash", "brernmundglon",
    "brerrickchesh", "breshbail", "breshgrathslon", "bretchiost", "brethclond", "brethflaick", "brethklio", "bretsnus",
    "brickdin", "brimskaind", "brimwand", "brimweamklol", "brincul", "brindbrath", "brinjas", "brintrurnprou",
    "briocksergiost", "brioglick", "briojim", "briondjear", "briondquer", "briondtroam", "brionnearn", "brionproack",
    "brionquees", "brionspeatfith", "brioscrest", "brioshsoath", "briospioscreat", "briostcheern", "briotwost", "brirbeas",
    "brirbrush", "brirhist", "brirndeend", "brirndest", "brirnsmund", "brisboas", "brisbous", "brischend",
    "brischiol", "brisflaskree", "brishblairn", "brishdend", "brishkeesh", "brishplour", "briskeenflouck", "brisklo",
    "brisseal", "bristdeend", "bristreat", "bristtrum", "britdrutskorn", "britplick", "broachourn", "broackcrosh",
    "broalgrouth", "broamdrind", "broandmound", "broanshur", "broarboash", "broardras", "broarnfeas", "broarnsaiceem",
    "broarnsmost", "broarplith", "broarsteer", "broasdor", "broashprosh", "broashzas", "broaslist", "broasshoumfock",
    "broassmith", "broasstock", "broastkrees", "broastthesh", "broathjack", "broatraick", "brockcruck", "brockgoutvoust",
    "brockskan", "brocktrai", "brockwursnea", "bromsleatmirn", "bromtast", "brornfeest", "brosclesh", "broshcruck",
    "broshmeern", "broshspoam", "brothglir", "brotstern", "brouckdrash", "broulchouth", "broulflarn", "broumfroth",
    "broumgli", "broumklem", "broundskound", "brourkrailbus", "brournzust", "brourquourn", "brousbrut", "broushjis",
    "brouskimjearn", "brousmist", "broustflur", "broustskeern", "brouthblorn", "brouthhoum", "brouthlut", "broutslun",
    "broutweas", "bruckhaim", "brufri", "brumfeersnarn", "brumslack", "brundkiruth", "brundmis", "brundzearn",
    "brunnush", "bruproarpream", "brurnsnouck", "brurnwush", "brushras", "brushshioth", "brusreal", "brustfloat",
    "bruthbloand", "bruthhourn", "bruthslil", "brutkreack", "brutstraisbom", "brutteest", "bruzoat", "buckmos",
    "buckpliot", "bucksiondquen", "bucloack", "bulbir", "bulqueand", "bumnoarnwoar", "bunban", "bundteenvea",
    "bunsoutkeal", "burcreth", "burfromheeck", "burhel", "bursnickplund", "burstrust", "busfroarn", "bushdree",
    "busnoas", "bustkrash", "bustplust", "bustsoal", "buststrul", "bustteack", "busttound", "cackdu",
    "cadeast", "caickflun", "caickkraish", "caickskaim", "cailceesfroarn", "cailglu", "cailhist", "cailpeestrush",
    "cailwios", "caimquith", "caimsloulflor", "caimspeack", "caimthun", "cainfoudris", "cainrush", "caircourn",
    "cairncost", "cairncroar", "cairnmaist", "cairnnind", "cairnskougain", "caisclurn", "caispo", "caithcreel",
    "caithkiskend", "caithskim", "caithvath", "caitkrund", "caitsun", "caittreshveash", "cakoas", "calfliosh",
    "calflurn", "camcleamcar", "camkreack", "camprairdren", "camstrush", "cankeeshploash", "carkeatstaish", "carleem",
    "carnfaisthen", "carnrashprairn", "cashcrorn", "cashtes", "castflal", "castuck", "cathkrair", "cathshast",
    "catriostskut", "cealproan", "ceamdrond", "ceamjot", "ceamteen", "ceansiom", "cearcroum", "cearnvoack",
    "cearsum", "ceashchum", "ceashspand", "ceashspick", "ceashwel", "ceasstash", "ceastman", "ceastsneackkel",
    "ceatgiosh", "ceckglurn", "ceecklelbeern", "ceecktroum", "ceelgrel", "ceenfrout", "ceengoagloack", "ceertai",
    "ceesbom", "ceescli", "ceeshpreast", "ceeshslout", "ceeshsnior", "ceeshtril", "ceesthailtam", "ceestriom",
    "ceestzest", "ceetbiossheack", "ceetciotkluck", "ceethland", "ceethseat", "ceethstee", "cehern", "celmis",
    "cemgrion", "cencotceam", "cendplust", "cenhoushthan", "cenklastkreen", "cenpees", "cenpiock", "cernpockbriorn",
    "cernprum", "cerstoar", "cesdrith", "ceshblorn", "ceshcloun", "ceskais", "cestbeeshslam", "cestgees",
    "ceststrust", "cethutsluth", "cetrit", "chackdeem", "chacknost", "chafion", "chaibiondneam", "chailcur",
    "chailfrut", "chailrest", "chailvum", "chailzuthbrer", "chaimblior", "chaimcrer", "chaimdor", "chaimsmeash",
    "chaindjarn", "chainfraim", "chainhearn", "chainot", "chainshea", "chaipairn", "chairnstrear", "chairpir",
    "chaischarn", "chaishbloul", "chaishglait", "chaishslock", "chaistsost", "chaithgleeck", "chamfrunplesh", "chanloashpo",
    "chanvaim", "charncretshath", "charnklock", "charquear", "chasdear", "chaslus", "chassmound", "chastblelproas",
    "chastcuck", "chatfiot", "chatgut", "chathpliom", "chatquea", "chatskust", "chatwouttroat", "cheackstam",
    "cheacktrast", "cheakrest", "chealklaim", "cheampreend", "cheandkroar", "cheandpland", "chearbrir", "chearchoam",
    "chearnkree", "chearstrio", "cheashbor", "cheasjoush", "cheasprem", "cheassast", "cheatdru", "cheatfrarn",
    "cheatquin", "checkplish", "checkpourn", "cheegar", "cheelkle", "cheemcoultoth", "cheemdeand", "cheendpliock",
    "cheendsmain", "cheendziolzast", "cheenkoush", "cheerbroust", "cheergriost", "cheersoul", "cheesblind", "cheesoarn",
    "cheespran", "cheestneast", "cheestout", "cheethnou", "cheethstish", "cheewath", "cheldastbloush", "chelspeet",
    "chelvon", "chemclircleash", "chemgrish", "chemmist", "chenba", "chendcorn", "chendcoth", "chendsmoth",
    "chendspoun", "chenfreath", "chenkeack", "chenprear", "chensloath", "chepoandfur", "chernbroack", "chernbroamboar",
    "chernean", "chernleack", "chernvickfruck", "chesgiolskam", "cheshcrond", "cheshkith", "cheshpreet", "chesploumslout",
    "chestesh", "chestfain", "chestviol", "chethshaish", "chetvair", "chickkroack", "chicklosh", "chickskom",
    "chilspath", "chimlaithclind", "chimshoust", "chimsmam", "chimveeth", "chinclond", "chindshion", "chindskosh",
    "chingur", "chiolkon", "chioltoand", "chiomdreem", "chiomflearn", "chiomhut", "chiomquuck", "chiomsatfrioth",
    "chiondskin", "chiorain", "chiorhouck", "chiorspil", "chioshcesh", "chioslourn", "chiothgleend", "chiothstroash",
    "chiotrath", "chiotsnait", "chirsloan", "chirstreas", "chisgloum", "chishsteash", "chishviorn", "chispoaspaith",
    "chistpourn", "chitciock", "chithciondfeck", "chitkleack", "chittrilglock", "choadouth", "choamkreal", "choanbreal",
    "choannol", "choanraiveath", "choaque", "choarfurn", "choashglouth", "choashsnaind", "choasmend", "choasnout",
    "choastbloat", "choastforn", "choastquer", "choathclou", "choathdioth", "choatkeck", "choatkind", "choatseash",
    "choatspi", "choatvior", "choatvouth", "chockdrout", "cholsesh", "cholslast", "chondzelskut", "chongon",
    "chonnand", "chopliornweeck", "choprouth", "chornpren", "chorprair", "chosfroust", "choshkroan", "chostthotslirn",
    "chotfliock", "chotgrerfreet", "chothir", "chotskornloum", "chotti", "chouckskush", "choulgrin", "choumbam",
    "choumblish", "choumfust", "choumquit", "choumstoan", "chounblast", "chounrion", "chourncrish", "chourplaist",
    "chousthaisneer", "choutklion", "chuckgres", "chudu", "chulchorn", "chulthern", "chumbraitcrait", "chumeen",
    "chumsli", "chuncloagroash", "chuncril", "chundfrio", "chunsum", "chunwoth", "churflarn", "churloargriock",
    "churnblaish", "churnfroust", "churnsim", "churntrost", "chursnushveesh", "chushgleand", "chushseem", "chusjund",
    "chussustglior", "chustcreeck", "chustspaim", "chutciock", "chuthblet", "cikleecksnees", "cilorn", "cilsmoand",
    "cimsern", "cindcealkreas", "cindfrom", "cindheesh", "cindtoast", "cintreandprail", "ciockmamquith", "ciocksmair",
    "ciomgret", "ciomnist", "ciompoamspis", "ciomteendquoan", "ciondreestkeal", "cionmeethpeast", "cionshoul", "cioploas",
    "ciornceet", "ciornmaith", "ciosflest", "cioshkoultaind", "ciospith", "ciostjosh", "ciostriol", "ciothlirnnoth",
    "ciothspust", "ciothstrosh", "cioththoust", "ciottishwaick", "circlin", "cirjos", "cirnel", "cirngrurn",
    "cirntarcrith", "cirnthum", "cirsnu", "cishqueer", "citgroth", "cithcrend", "cithrum", "cithzoubrir",
    "ciwend", "clackgoust", "clackqueet", "clackreest", "claibroarn", "claickfrearn", "clailpend", "claimmimgleand",
    "clairkreand", "clairquilble", "clairrand", "clairsnim", "claishdrean", "claiskosh", "claisquick", "claistkreem",
    "claistmeel", "claiswesh", "claiswis", "claitcreesnu", "claitcut", "claithshath", "claithsmom", "claitklou",
    "claittrio", "claitwoack", "claiwindgreand", "clalstrin", "clamdreend", "clamgras", "clamjoum", "clamnour",
    "clamtrost", "clandchimtrion", "clanfrust", "clarjathspiorn", "clarler", "clarpleal", "clasdream", "clashnacknurn",
    "classleal", "clastclanjem", "clastspoal", "clatdre", "clathjouth", "clatstu", "cleackrio", "cleackthee",
    "clealzir", "cleamchoarn", "cleankril", "cleanwoas", "cleargun", "clearmea", "clearngreem", "clearnsmund",
    "clearslit", "clearstrum", "cleashearn", "cleashgeas", "cleastchaick", "cleastgrer", "cleatgouck", "cleathbirquour",
    "cleathblir", "cleathger", "cleathprar", "cleaththou", "cleatnoklush", "cleeckkearn", "cleelniond", "cleelpoust",
    "cleemsnaim", "cleenpioth", "cleensmarn", "cleernkreesh", "cleernthost", "cleersnait", "cleeshtoa", "cleesnear",
    "cleesnoash", "cleestcredil", "cleetchour", "cleeteath", "cleetfock", "cleethslait", "cleevound", "clelcraim",
    "clemjaick", "clensmioth", "clentrashkloan", "clerfreeshgrel", "clernclurn", "clernkluth", "clernsnios", "clesbrat",
    "cleshbelpi", "cleshstithpin", "clesju", "clestskiot", "clestwoat", "clestwuck", "cletsnearn", "clildirn",
    "clilkath", "clilkir", "clilkrioth", "clilvin", "climfait", "climsnol", "clindgreern", "clindprend",
    "clinklost", "cliockroar", "cliockwet", "cliodrul", "cliolskand", "cliomquust", "cliondgloun", "cliondot",
    "cliondveethkre", "clionjouth", "clionsloun", "clionstrior", "clionwingral", "cliordou", "cliorfail", "cliorklaish",
    "cliorngick", "cliornmiond", "cliornmoust", "cliorqueamzeas", "cliortheam", "cliorwensheand", "clioshdresh", "clioshshund",
    "clioskeathjum", "cliostkroth", "cliostquai", "cliostspoas", "cliothdrern", "cliothfean", "cliquind", "clircrith",
    "clirnchest", "clirnglim", "clirvock", "cliscrol", "clishlethflist", "clishsees", "clishthiolgas", "clistanthoth",
    "clistwarn", "clistzol", "clithlaiglaim", "clitlo", "clitsnain", "cloabreend", "cloackmeern", "cloacktundtan",
    "cloalkoarn", "cloandflen", "cloandkriorna", "cloarbrershur", "cloarnbris", "cloarnstoar", "cloarvai", "cloasfle",
    "cloasglearcrir", "cloashbloul", "cloashglouth", "cloasrit", "cloasstesh", "cloastbath", "cloastglou", "cloastpean",
    "cloastslouth", "cloathfi", "cloatjond", "cloatsmoam", "clocheast", "clockcind", "clockrat", "clockshand",
    "clolstiosvorn", "clomtriom", "clondbreash", "clondcluck", "clonpam", "clornprim", "clornspen", "clornvom",
    "closchain", "closquil", "clossmeem", "clotbroast", "clotslit", "cloucksmind", "cloulzash", "cloumheas",
    "cloumstraproam", "cloundskush", "clourfir", "clourfrun", "clourleet", "clourndoswon", "clournmond", "clouskreeck",
    "cloustgior", "cloutshist", "cluckblaitbus", "clucknoam", "clucktreand", "clugait", "clugloam", "cluhios",
    "clulfrear", "clulsmeend", "clumgloth", "clundiokloust", "clunglais", "clunskost", "clurnleet", "clushspaith",
    "cluthgroast", "cluthourn", "cluttiotreeth", "coackblat", "coaglouck", "coagru", "coaljol", "coamvealcleem",
    "coandtios", "coandtrimmound", "coandveackcroa", "coansnin", "coarnkrut", "coarnmoand", "coasdrirngem", "coashshaind",
    "coashsmoath", "coasnoarn", "coasstraind", "coastgreet", "coaszeat", "coatflern", "coathjeer", "coathleenloa",
    "coathshound", "coathsin", "coatseandsearn", "coatwee", "coatwes", "cockbath", "cockgraind", "cockgree",
    "cockklashkrai", "cockplaim", "cockquiock", "cofreeckslios", "colgeck", "coltoush", "comclion", "compan",
    "compreem", "comsnoarn", "condclairn", "confream", "connoun", "conslish", "convous", "corblilci",
    "corbrirn", "corncroun", "corndut", "cornmaith", "corwust", "coshvoun", "cosmor", "costdreth",
    "costmon", "cothfes", "cothniorn", "cothshourn", "cotpeast", "cotpoand", "cottouth", "coufiom",
    "coulspaispeast", "coultun", "coulvouslaish", "coundglat", "coundnal", "counpiond", "courstoat", "cousbeeckbeack",
    "couscioth", "coushblairn", "couskrelnick", "couspal", "coustsnearn", "couthklair", "couthpaith", "couthske",
    "coutmol", "coutsheas", "couttreenkea", "coutwound", "crackbraist", "cracksan", "craickbi", "craickploas",
    "craicksoam", "craikrondvuck", "crailnun", "crailsestzurn", "craindbrand", "crainhion", "crainvir", "crairfloarn",
    "crairntraist", "craishjulplea", "craisshoash", "craistchuck", "craithneen", "crakleem", "crakrio", "cralplom",
    "cralspash", "cramcreas", "crandfleer", "crandprirn", "crankorn", "crarnclick", "crarnsmirn", "crarpoullom",
    "crarpra", "crashlesh", "crashprath", "crasmock", "crastrum", "crastsoun", "crathsku", "crathsnem",
    "crathspust", "crathveck", "creackdoth", "creackglurmoun", "creacknoa", "creackploast", "creadoasziol", "creadriost",
    "creadrouth", "creamreend", "creandbrion", "creanddream", "creandgreack", "creandonketh", "creandspes", "crearnbath",
    "crearsloth", "creasslos", "creastplal", "creatbli", "creatskum", "crecriolsheet", "crecrith", "credoumgrim",
    "creeckre", "creecktoal", "creelpoutglio", "creelspeat", "creenbain", "creendsleash", "creensliteet", "creenvaim",
    "creenvoast", "creerpleas", "creeschust", "creeshbrist", "creeshgreem", "creeshgreer", "creessmair", "creestqueet",
    "creestskeack", "creetgai", "creethjast", "creetwail", "creldaind", "creldreck", "crelheer", "cremleeck",
    "cremstrios", "cremthern", "crendbim", "crendfleraind", "crendwas", "crenroutpru", "crensloun", "crernclous",
    "crernjethdras", "crernstroam", "creshdal", "creshfound", "crestskiorn", "crethkrer", "crethoustsmus", "creththour",
    "crethtroath", "cretqueel", "cretskiol", "crettrun", "cretzand", "crickflun", "crickglal", "crijiockglush",
    "crilglick", "crilspan", "criltreen", "crimhurn", "crimweaspreth", "crindrearn", "crinstam", "criochound",
    "criockmout", "criolques", "criolsneath", "criommest", "criondpior", "criondtim", "crionzeet", "criorcleeck",
    "criorndro", "criornskern", "criorntack", "criosgoat", "crioshjat", "crioshmiom", "criostpreer", "criothflest",
    "crioththiot", "criotriost", "criotshouchust", "criotsnick", "crirnnut", "crisfon", "crishnurn", "critclundthee",
    "critjios", "critkreash", "croabothchail", "croabrear", "croackflom", "croacknurteer", "croandheshchai", "croanhurn",
    "croanneck", "croansiom", "croarnfaith", "croarngurn", "croarres", "croashspoast", "croastnainjeas", "croatfliquit",
    "croatgourn", "croathcriorn", "croathgloth", "crockcack", "crockfrockdol", "crockwouck", "crohundquaim", "crombai",
    "cronddiom", "crondfiol", "crondzon", "crorblanfleack", "croshchith", "croshfloun", "crospaispearn", "crosseesstond",
    "crotgleack", "crothglungaick", "crotkroath", "crotwiock", "crouckstrou", "croulkroack", "croulmeck", "croulquel",
    "croumdiorn", "croumgoam", "croumkram", "croumwiot", "crountrous", "crourklack", "crousbros", "croushchith",
    "crouskock", "croustshaim", "croutaldru", "crouthkur", "croutlath", "croutplin", "cruckdreel", "cruckliot",
    "crukrem", "crulboam", "crulhous", "crumblaist", "crumceamprind", "crumnit", "cruproushstous", "crurnplock",
    "crurnsmuthgrea", "crurstoust", "crustproth", "crustslout", "crusttheash", "crustzour", "cruthkaith", "cruthplios",
    "cruthvoat", "crutprosgli", "culmat", "culsushquound", "cumblol", "cumresh", "cumsnun", "cundfouthgio",
    "cundgriond", "cundlamtraick", "cungliot", "cunsmoundslail", "curfris", "curnblosh", "cusfrar", "cushlam",
    "custbrouck", "custsneern", "cutfrioth", "cuthbloun", "cuthsnethjend", "cuttes", "cuttroush", "cuween",
    "dabiorn", "daickquest", "daidear", "daiheendproun", "daijelcai", "dailmeer", "dailoastnack", "daimloas",
    "daindma", "daindsleaslel", "daindsnatzan", "daindsor", "dairbrin", "dairdeth", "dairskind", "daishlaick",
    "daishquoar", "daistcosh", "daistflouck", "daitbrouck", "daitspiosh", "dakloarnrairn", "dalpun", "damskain",
    "damthathoarn", "danboar", "dandmiost", "dandsmeam", "dankioth", "dansmeeck", "darnbleer", "darndumnoash",
    "darsloumskeend", "dassleet", "dastsmulslirn", "daststraislean", "dasttosh", "dastweetbi", "dastwoar", "dathgaick",
    "dathklion", "datstout", "datziostgar", "deackbreand", "deagreer", "dealchearn", "dealgiosh", "dealrund",
    "deamlus", "deamsmoash", "deanbost", "deandbriond", "deanddroawend", "deanddu", "deanpaind", "deanwith",
    "deargoa", "dearkloack", "dearku", "dearmail", "dearrand", "dearshosh", "dearskend", "deartiock",
    "deasblo", "deascion", "deasjan", "deastiost", "deastjairn", "deastpream", "deastshiock", "deatbreash",
    "deathsleem", "deatneck", "decksith", "deckveel", "deeckclound", "deeckflior", "deeckkleen", "deecksleel",
    "deelchait", "deeljounchan", "deembrash", "deendshais", "deentree", "deequick", "deerndishskur", "deerskais",
    "deerzetgrouth", "deeshslund", "deeshsporwern", "deeslut", "deesseand", "deesshus", "deestcrean", "deestoal",
    "deestrindsnen", "deestrous", "deestwond", "deethclouth", "deethdor", "deethfroul", "deethgleckkles", "delclithkraist",
    "demspathvis", "denchaindtroar", "dendspol", "denpos", "denquiosh", "depoal", "dernkloas", "derntush",
    "derveestshund", "desgrist", "deshsteck", "destfroash", "destzum", "desveash", "detcleal", "dethboal",
    "dethgiond", "dethner", "dethskar", "dethsmear", "dilkrish", "dimquun", "dindfour", "dindmolceeth",
    "dindro", "dindstroand", "dinkreesh", "dinstoun", "diockfreest", "dioljotwern", "diolzeshick", "diomdrous",
    "diomskior", "dioncras", "diondflund", "diondfroash", "diondspiorn", "diorclal", "diorklock", "diorkos",
    "diornbleam", "diornfrick", "dioshchish", "dioshzer", "diostfrioscath", "diostfron", "diotcreembleem", "diotgound",
    "diothboutsoush", "diothquosh", "diotimsush", "diotsmern", "diottaistfleck", "dipoashfrul", "dirnjout", "dirnteast",
    "dirra", "dirskeeck", "dirskum", "dirtrush", "dispoat", "disspaith", "distfrear", "distgindhoum",
    "dithzor", "ditstrumtosh", "ditwestskoat", "doackcrendcern", "doafleatle", "doamquist", "doanceen", "doanouth",
    "doanzen", "doaqueest", "doarsheshquoth", "doarspioth", "doasdeer", "doasfe", "doashdroar", "doashnut",
    "doastaick", "doaststreas", "doathgean", "doathzous", "dobrith", "dockturnsleash", "docoat", "domsait",
    "domstreck", "domthio", "dondkloust", "dondmou", "dondstreashout", "dondzus", "donstrum", "dornsandair",
    "dorpleam", "dorquethflor", "dorskensmun", "doshush", "doskam", "dosneargrand", "dostpat", "dostsnound",
    "dotbleeck", "dothglattoash", "douckgoack", "doucksmoat", "doufreatmuth", "doumsmoat", "doundjick", "doundtith",
    "dounshound", "dounvous", "dourcrees", "dournfriosh", "dournsmush", "dourplelfriol", "dourpreath", "dourstrush",
    "dousfelfrast", "dousfras", "dousgroutno", "doushkarn", "doushkrash", "doushquotspem", "doushshean", "dousmi",
    "doustmeatsmus", "dousttem", "douthsoust", "doutzu", "dracksniosh", "drackthack", "drafith", "draickchoat",
    "draickmim", "draickshick", "draidror", "draiklouth", "draikreath", "drailgir", "draimcram", "draindsnet",
    "drainhend", "drairfornsme", "drairnriom", "drairnvick", "drairthil", "draisfrosh", "draishock", "draisoack",
    "draithbroar", "draithcur", "draithiorn", "draithsnessait", "draithspom", "draito", "draklairn", "draldror",
    "dralglio", "drallind", "dralvoul", "dramdriost", "dramsher", "drandcruck", "drandthear", "drantru",
    "drarnuth", "drarsmoath", "drasbraiskor", "drashfrat", "drashwioth", "drastclu", "dreackjit", "dreackspoal",
    "dreacktruth", "dreackveesh", "dreackwaim", "dreacound", "dreagoast", "drealfeas", "drealkat", "drealprair",
    "drealzoack", "dreamdeancros", "dreamguckcros", "dreamquiond", "dreamspoat", "dreandrendstai", "dreangrai", "dreansothklen",
    "dreapee", "dreargloal", "drearnchith", "drearnkou", "drearsorn", "dreashtru", "dreasjoa", "dreasmem",
    "dreasstion", "dreastgleck", "dreaststran", "dreastwuth", "dreasvond", "dreather", "dreathpleas", "dreatplourn",
    "dreatstipis", "dreazear", "drecion", "dreckstriond", "dreeblorn", "dreeckclut", "dreeckklinvuth", "dreecksmot",
    "dreeckspon", "dreelfet", "dreemcho", "dreendblaith", "dreendriorn", "dreendstreat", "dreenfruth", "dreenhain",
    "dreerndrear", "dreernflouck", "dreernweend", "dreerpriond", "dreersleer", "dreesflut", "dreeshfrind", "dreeskroas",
    "dreesshasttro", "dreestpreck", "dreeszoust", "dreethhaidar", "dreetveeck", "drelbroash", "drelgleck", "drelka",
    "drelstaim", "dremflistchoun", "dreplarn", "dreplut", "drermash", "dreshstroun", "dresklou", "dresorn",
    "drestfluck", "dretbol", "drethboajit", "dretreeshstee", "dribolskoan", "drickkloan", "dridoush", "drigleand",
    "drilgleeck", "drilstritblis", "drilvom", "drimchaith", "drimchock", "drinbroash", "drinclol", "drincriockclas",
    "drindthend", "drinspoust", "drinvond", "drioblend", "driolslal", "driolwind", "driomfloath", "driondquout",
    "driondviosh", "drionquer", "driorncreast", "driorntiond", "driorstrothgom", "drioshmeest", "drioshpiock", "drioshwaiplour",
    "driosorsmas", "driossmi", "driossnus", "driostvul", "driothquock", "driotraspliond", "drirnblarn", "drirsnoul",
    "drisbraissteat", "drishveckdrust", "drisproanslean", "dristgrurglou", "drithblin", "drithon", "dritslund", "dritspousiond",
    "droadairn", "droaljash", "droamflothquu", "droamkish", "droamtum", "droamzosbeet", "droandfraist", "droanshoursmol",
    "droaproas", "droarblend", "droarbliot", "droarnthortri", "droashzon", "droasloack", "droasquur", "droastbeet",
    "droastbre", "droastflesh", "droastnock", "droastskoas", "droatbleal", "droathglish", "droathstroum", "droatpiosh",
    "drockspail", "droflol", "drolspair", "drolzoaneer", "dromtrut", "drondcror", "drondplick", "dronskioshprir",
    "drorflat", "drornbloand", "drorncheash", "drorndro", "drornet", "drornfiondnea", "drornglust", "drornkroam",
    "drornsous", "drorskoas", "drortre", "drosclor", "drosdroashsos", "droshfond", "droshtreth", "drosquickzior",
    "drothbet", "drothfeas", "drotjoun", "drouckpreash", "drougleest", "drouldethhoth", "droultrest", "droumkees",
    "droumkroa", "droundclesnaim", "drounmes", "drourbrust", "drourncoatund", "drourris", "drousmoa", "drousmoum",
    "drouspeathsoar", "droustcanloam", "drouthcar", "droutkrack", "droutlas", "druckfritnit", "drulboand", "drulgras",
    "drultairn", "drumest", "drundcran", "drundshel", "drungrairceack", "drurmiosh", "drurnfousjuth", "drurntios",
    "drurplor", "drurquio", "drurraind", "drursmoun", "drurthast", "drustglet", "druthcrarn", "druthsaith",
    "drutslait", "dubleer", "duckkem", "duckproaglo", "ducktroumfos", "dulbloan", "duldiosh", "duleendtreast",
    "dulrishblio", "dumcesh", "dumcreack", "dumdreal", "dumwoath", "dunbeas", "dunneendpash", "durnfust",
    "durskulgirn", "dusbaithwim", "dushleenzust", "dushshir", "dushsteand", "dusjash", "dusthiostclith", "duthcrestden",
    "duthgock", "dutkurn", "fackcasgoun", "facktrost", "faickklal", "faickthuszet", "faicleern", "failmathgreack",
    "failom", "faimbleastrout", "faimboath", "faimgrem", "faimshoth", "faindpreath", "faindtriond", "fainsneen",
    "faircock", "fairflaigios", "fairnkemsloul", "fairnlind", "fairnsmiorsma", "faispul", "faisskeash", "faisttreel",
    "faistur", "faithskil", "faitspoansneem", "falhoarn", "fandcrail", "fandneasspound", "fanflai", "fanflitsmot",
    "fanvat", "farnhiock", "farskamshai", "fasdrist", "fasfesthurn", "fashleet", "fastsnan", "fastspeer",
    "fatcheel", "fatfrorwal", "fathfoarncrous", "fathkoas", "fatsnast", "fatthir", "feackfuth", "feacksheand",
    "feakoa", "fealcrust", "fealnee", "feamklo", "feandfloalkam", "feanflouth", "feansnou", "feantrios",
    "feardoat", "fearglut", "feariom", "fearntio", "feashniom", "feashskeack", "feashzick", "featble",
    "feathplosiot", "featploshfrorn", "featvee", "feckskas", "feclioth", "feeckdret", "feeckfloat", "feedreeth",
    "feemmoum", "feemniol", "feemwoush", "feendquol", "feendrast", "feendslem", "feenmeal", "feenprun",
    "feergack", "feerncourn", "feeshplas", "feeshspackplot", "feeskishkrait", "feeskliost", "feestbrear", "feestquim",
    "feestthick", "feetgrouth", "feethlet", "feetnoth", "felcloth", "felkle", "felwoas", "femaith",
    "fendseal", "fenshoush", "ferskend", "fertoum", "fesfrick", "fesgroth", "feshcairn", "feshkloar",
    "feshtranhouck", "feskeat", "feskosh", "festhot", "festspoammiosh", "fetbrornfrio", "fethklestzeam", "fethoash",
    "fevack", "filchoulsast", "filquembain", "fimliosh", "fimprat", "finchur", "fincroush", "findfroush",
    "finlo", "finviol", "fioblurn", "fiockfoam", "fiockkist", "fiockkrioth", "fiolstrin", "fiomfren",
    "fiompoash", "fiondsmush", "fiongroush", "fionplaishseas", "fionstionfeam", "fiontairn", "fioplothgriot", "fiornfoath",
    "fiornsteem", "fiorntrispriom", "fioshmeel", "fioshspern", "fiostcheck", "fiostdreand", "fioststreat", "fiotgar",
    "fiothputfourn", "fiotklous", "fipoand", "firnstrous", "firzen", "fisgurn", "fishdrest", "fishquuspreeth",
    "fispeackslourn", "fistjai", "fistspeeck", "fiswin", "fithcheend", "fithqueack", "fithspeash", "fithstrind",
    "fitkathproash", "fitsnearn", "flackchuttick", "flackparnfrur", "flaibaith", "flaicksneeth", "flaildack", "flailpout",
    "flailsmefal", "flaimnais", "flainslenfrur", "flaintheal", "flairdral", "flairnbirn", "flairnzeat", "flaisfeem",
    "flaisstoul", "flaistblind", "flaithnem", "flaiththean", "flaitlain", "flaitshend", "flamklern", "flamteat",
    "flandslushfrea", "flantram", "flaplurn", "flarblen", "flarncleast", "flarnplut", "flarnshoun", "flashsnal",
    "flashspaist", "flasjatkus", "flassmaith", "flasstandleath", "flasstrol", "flastglea", "flathblith", "flathmi",
    "flatkrorgirn", "flattheck", "flazurn", "fleackput", "fleamblenzeeth", "fleandut", "fleandvoam", "fleanshath",
    "flearnfockthen", "flearngreagrin", "flearnkat", "flearnnean", "flearnplel", "flearnsist", "flearstolwend", "fleasdrust",
    "fleasjaist", "fleasprind", "fleastnaind", "fleathglioth", "fleaththiock", "fleatrustrirn", "fleatstriotzos", "fleatviond",
    "fleeckchat", "fleefriom", "fleegeer", "fleelgit", "fleelhul", "fleelskiond", "fleemblean", "fleemsio",
    "fleemspaim", "fleendborn", "fleendprusjot", "fleenfrar", "fleenploam", "fleenranzurn", "fleerklon", "fleeshclirn",
    "fleesklouck", "fleesmoam", "fleesstraind", "fleethbreesh", "fleethduchem", "fleethshem", "flelchoun", "flempeend",
    "flemsmean", "flenciom", "flendquur", "flendraind", "flendstrour", "flenfouth", "flenpleel", "flergus",
    "flerndrear", "flernlair", "flernstaist", "flernstur", "flerroatmon", "flerstriot", "flesfreal", "fleshdendmorn",
    "fleshskiom", "fleshsust", "flesttrur", "flethguth", "fliklackpeas", "flilmick", "flingron", "flinspanhot",
    "flinwoackdack", "fliockhar", "fliockneern", "fliockrul", "fliockskean", "fliofoulkroum", "flioldoath", "flioljoun",
    "fliolstrash", "fliomsmoash", "fliomstoast", "flionbrensput", "fliondbourndoa", "fliornioth", "fliornsheel", "fliossmio",
    "fliostclail", "fliostzaistoas", "fliothdreeck", "fliothsushse", "flirfreen", "flirnfam", "flirntheer", "flirnzair",
    "flirslarn", "flisdrouck", "flishbrorn", "flishploack", "flismealsmen", "flisrestnack", "flisskios", "flisskur",
    "flistklostvoth", "flistrul", "flithblait", "flithgrock", "flitmuck", "flitvoash", "floackcacroth", "floackpren",
    "floaflostniol", "floahim", "floalsnout", "floamdu", "floamfou", "floamkloun", "floandstou", "floangumbrer",
    "floarcern", "floarmionstest", "floarncroack", "floasglea", "floashloshpust", "floasproar", "floastlaind", "floastsper",
    "floathfouck", "floathsnoum", "floatleend", "floatmil", "floglas", "floklel", "flolprorn", "flolstalmom",
    "flolzul", "flonbluck", "flonthoust", "florgloat", "florjornstroum", "florkutskou", "flornfeetblir", "flornrum",
    "flortam", "floshai", "floshjesh", "flostprast", "flostrum", "flostslaithest", "flotfler", "flothdouck",
    "flothtreer", "floulzol", "flounblees", "floundhe", "floungaishzean", "flountait", "flounzaith", "flounzeeth",
    "flourflion", "flousfra", "flouslais", "flouspresh", "floustvirn", "flouthcaish", "floutklicktree", "floutslathrand",
    "floutzorn", "fluckporn", "flucktreeck", "fluklios", "fluklond", "flumfiopion", "flumfroum", "flunddrarn",
    "flunglul", "flurgriorsarn", "flurmeashmoun", "flurndrom", "flurnflethfou", "flurnglarn", "flurnpu", "flurzai",
    "fluscim", "flusglior", "flussheeth", "flustas", "flustnour", "flusttrath", "fluthfris", "fluthith",
    "foackcound", "foackglin", "foacklindgrarn", "foackmourn", "foamfeeckcurn", "foamwaist", "foandfrin", "foanstrourn",
    "foanzouthjioth", "foargoath", "foargreer", "foarprit", "foarskout", "foarsneesh", "foaschaind", "foashfleen",
    "foastliock", "foastzaicksha", "foatboarn", "foathsloust", "fockspecros", "foglairvoth", "fogra", "folcuck",
    "fondkom", "fonkloathblil", "fonnom", "fopresh", "forbeamsnais", "forgloth", "forjonhuth", "fornfoast",
    "foshdroand", "foshsmeet", "fospashbril", "fosqueand", "fostcloushbean", "fostrol", "fotsourn", "fotthioth",
    "foudrioth", "foumslisgresh", "foundbrais", "founmees", "fourncuth", "fousdrush", "fousfand", "foushzim",
    "fouskaist", "fousskemtreand", "fouthoush", "fouthsmeern", "foutkriot", "foutproa", "foutsko", "foutslaist",
    "frabestslaick", "frackves", "fraheas", "fraibleth", "fraickvum", "frailbloash", "frailspund", "frainspeern",
    "fraircliom", "frairngen", "frairnsmast", "fraishtoum", "fraishtras", "fraithbourn", "fraithdrick", "fraithgrern",
    "fraitplulpun", "fralfreathzen", "frambust", "framglern", "framskirnjond", "framstiond", "frandhoath", "franquorn",
    "frarcrior", "frarncat", "frarnveet", "frartoundslem", "frasbloth", "fraspriost", "frasttul", "fratfoathcreel",
    "fratgailqueer", "frathcreen", "frathdruck", "frathkliost", "fratpiom", "fratslion", "freackjoumfoun", "freackstash",
    "frealclear", "freamfluscheet", "freamkiosh", "freamo", "freamthais", "freandrest", "freanpraist", "freanskiock",
    "freansposkleas", "freanzoth", "freasbrai", "freasflarwern", "freasklouck", "freasoasslom", "freastquoth", "freckspish",
    "freckwurnsloan", "freeldrurfour", "freelgrios", "freemciond", "freemfush", "freemjond", "freendfiom", "freeshke",
    "freeshpet", "freesrend", "frekrol", "frelbasttrat", "frelbrio", "frendcoatslest", "frengrist", "frenkeathclea",
    "frenkoan", "frercleanskoan", "frernta", "frersio", "freshflost", "fresjeath", "fressior", "fretfrel",
    "frethgrack", "frethprick", "fretnund", "fretvoum", "fricus", "frilcloash", "frilfrournmost", "frilloa",
    "frilquiond", "frilzustbleck", "frimzosttor", "frindmaist", "frindtou", "frindtrait", "friockclithkus", "friocktroun",
    "friockzir", "frioheanbuck", "friolget", "friolgrustjiot", "friolloack", "friombrind", "frionaim", "friondkais",
    "friontraist", "friontreesh", "friorheeck", "friorhiorn", "friormoul", "friornclirn", "friornvust", "friosdaickdor",
    "frioshspat", "frioshtor", "friosplaith", "friossnail", "friostflean", "frioststrous", "friotdeck", "friotfran",
    "friothstutcear", "friotkreash", "frirdeckskaind", "frirdiost", "frirngack", "frisdoa", "frishglee", "fristbo",
    "fristziol", "frithbeam", "fritreat", "froabland", "froackpreas", "froacksnal", "froakeesh", "froalskulwee",
    "froamcloam", "froamslean", "froandjis", "froankreer", "froardriond", "froarnkroum", "froascoashhar", "froasheemblon",
    "froashgren", "froaslum", "froasplorn", "froasqua", "froatcroarn", "froatcrous", "froathslensten", "froathsnir",
    "froatkim", "froatsto", "frockkrack", "frocktrist", "frokath", "fromborn", "frombouth", "fromku",
    "fromluth", "frondsloam", "fronjeath", "fronwel", "froquastziol", "frorngloath", "frornkoal", "frornsleet",
    "frornzaim", "frosdea", "froshbral", "froshdrees", "frosklackstes", "froskoand", "froskriost", "frospout",
    "frossleer", "frostjeath", "frostquiock", "frotcheer", "frotcruth", "frotfaick", "frothgat", "frothleathmith",
    "frotvund", "froucktesh", "froulquon", "froumskoast", "froumtiost", "froumwiock", "froundloast", "froundraitgith",
    "frourfoush", "frournfret", "frournslat", "frourskaick", "frourtruck", "froushprind", "froushund", "froustsmoas",
    "frousttiock", "frouthgeest", "frouthgrathish", "frouthnoul", "frouwoangiol", "fruckdetfrourn", "frulnunchiond", "frulslet",
    "frumtel", "frundcend", "frundflouth", "fruproas", "frurfo", "frurnbloust", "frurndreeck", "frurnfai",
    "frurngiot", "frurnplathha", "frurnsnut", "frurnstul", "frushkroarn", "frushtheath", "fruskour", "frussnoun",
    "frustprust", "fruthklish", "fruthstrai", "frutsair", "frutteernfu", "fruttriolriond", "fulgim", "fultith",
    "fulwit", "fumsnet", "fundreeck", "funem", "funkend", "funslaish", "funsmiol", "furflund",
    "furngoarn", "furnsouthsnend", "furnzai", "fursouck", "fusglosh", "fushglat", "futfithbas", "futhandcreast",
    "futsler", "futwoamclaick", "fuwest", "gackbrim", "gackgrem", "gaickskist", "gaickwear", "gailpaindzun",
    "gailskut", "gailsnoul", "gailstoat", "gailzourn", "gaimhasclul", "gaimnirn", "gainbrur", "gaindfath",
    "gaindwion", "gainskeet", "gaintrick", "gairgos", "gairlist", "gairnbail", "gairnceam", "gairnfiosh",
    "gairnskoundtus", "gaistsmound", "gaithblu", "gaithdosh", "gaithdour", "gaithgrarn", "gaithkeeck", "gaithstreal",
    "gaithzaind", "gakloun", "galbrous", "galcresh", "galtrom", "gamdroarn", "gamslainmeath", "gandpla",
    "ganfland", "ganquain", "garglandquain", "garnjees", "garnzeesh", "garsleashwoth", "gashhockjeen", "gashvun",
    "gasoastdrin", "gastfirnfoust", "gaththait", "gathun", "gathvearzick", "geabroat", "geamkirn", "geandcaithgam",
    "geandgloamcom", "geandreen", "geandwash", "gearnche", "gearncloand", "geasclul", "geashquios", "geasnushceest",
    "geasquoal", "geasthoath", "geathsaist", "geathshoas", "geckcriosh", "geecksoam", "geeckvuth", "geecoack",
    "geelklend", "geelproacil", "geemmoas", "geempeest", "geendthath", "geendthiprut", "geenkorn", "geenstil",
    "geenstrouceand", "geernkloath", "geernreck", "geescheath", "geesfrost", "geeshchoshfeth", "geeshgritkern", "geeshquefrack",
    "geeshspoum", "geeshtrand", "geeshwoarn", "geestarnjeest", "geetpournnest", "gelfus", "gemclern", "gemlouth",
    "gendclirn", "gendclurn", "gendmist", "gendpior", "gendsoustran", "gensloath", "gequeckgish", "gerntroam",
    "gersteaspiom", "gertouckbus", "gervul", "gerwon", "geshboar", "geshclosh", "geshfour", "getcleercon",
    "getkroanplest", "getleesh", "getprind", "getreadith", "gickfrer", "gicknost", "gikickstul", "gilkeam",
    "gimplushgar", "gimskoam", "gindisliond", "gindoaststeam", "gindreeshcream", "giocheeshsmous", "giolkouck", "giolmeas",
    "giolwolviost", "giomkionploash", "giomzoast", "giondglain", "giondstriokath", "giondzust", "giorgreern", "giorhack",
    "giorndiol", "giorngloar", "giornquouck", "giornstroack", "giosdoack", "gioshwoun", "giostpiond", "giostsnees",
    "giotcroar", "girdalproam", "girnais", "girndoshsten", "girnfleal", "gishtiotfreeck", "gisteth", "gistheandquear",
    "gistmandchea", "gistprio", "gistsmeel", "gitbloast", "githclout", "githjoath", "githno", "githstroas",
    "gitprouson", "glackbleth", "glackpith", "glaimsnashfior", "glaindbail", "glaindvost", "glainglearn", "glaingreack",
    "glaintaist", "glainthack", "glairnkrees", "glairnprouck", "glairnspur", "glaistpol", "glaisvat", "glaitfreath",
    "glaithciom", "glaithdeeth", "glaithmearn", "glaitleesh", "glaitmoarcral", "glaitpeath", "glaitplashbiom", "glaklist",
    "glalfriomqueet", "glandqueat", "glandsiothpeas", "glandskairn", "glandsnoum", "glanklonfroush", "glartiost", "glashsornza",
    "glaskroast", "glasthoan", "glastskofram", "glathbairbeeth", "gleackbrouck", "gleahol", "gleamcreelair", "gleamdroar",
    "gleamwoack", "gleandstrat", "gleandtirn", "gleankland", "gleanvous", "glearcheam", "glearfrio", "glearnklaish",
    "gleashblior", "gleashcleal", "gleaskaind", "gleastparnsees", "gleastshust", "gleatflouth", "gleathhaim", "gleathkeand",
    "gleckstrinveet", "gledreest", "gleeckbreern", "gleeckfoa", "gleelclitham", "gleelglist", "gleelsmaitpeer", "gleelspio",
    "gleeltreeck", "gleelwour", "gleempea", "gleendgreth", "gleendtrou", "gleenquurn", "gleerflamcler", "gleerhim",
    "gleerndous", "gleesflen", "gleeshrock", "gleeshzouck", "gleeslan", "gleesplish", "gleesploul", "gleetcheash",
    "gleethfliom", "gleethfouck", "gleethqueal", "gleethspear", "gleetol", "gleevoush", "glegriorn", "glemcloush",
    "glempreer", "glenloan", "glenzorn", "glerblir", "glerclust", "glerfeel", "glerfoush", "glerquenlom",
    "glesdoarn", "glesflend", "glesgrio", "gleshso", "gleskath", "glesmeavurn", "glespo", "glestdouthplul",
    "glestkleend", "glestmeet", "glestquion", "glethzest", "gletski", "glettrirn", "gleweeck", "glezuth",
    "glibror", "glickhair", "glilpoth", "glimcais", "glimcher", "glimsnash", "glinboul", "glindskos",
    "glinsmel", "gliockcrut", "gliockristmoum", "gliockthoul", "gliogreast", "gliolsnol", "gliomblist", "gliondflound",
    "glionmoam", "glionsmustdath", "glionween", "glionzean", "gliorcrend", "gliormon", "gliorntean", "gliorntheas",
    "gliostgit", "gliostkrous", "gliothplous", "gliovat", "gliovourn", "glirgond", "glirmock", "glishpion",
    "glisthost", "glistiondu", "glistreat", "glithhir", "gloacklerpe", "gloacloa", "gloafran", "gloajock",
    "gloalchoutkris", "gloalshitgioth", "gloarbliot", "gloarclear", "gloarcraith", "gloarncroa", "gloarnklam", "gloarshind",
    "gloarsmiond", "gloarwaith", "gloashgror", "gloastjoan", "gloatcliom", "gloathglatgrum", "gloavuckchaick", "glocharnharn",
    "glocloust", "glolchou", "glolcoash", "glolkrem", "glomglo", "glomsur", "glonklern", "glonpassmairn",
    "glonplondglith", "glorbrior", "glornspai", "glornwouth", "gloshkloash", "gloshsurn", "glosshir", "glostbash",
    "glotdrir", "glotfuth", "glothstreern", "glothzand", "glotkloas", "glotmioslash", "glottand", "glouckdrain",
    "glouljergraick", "gloulmarn", "gloulmash", "gloulpluth", "gloumpoath", "gloundstim", "glournsmath", "glousgees",
    "gloushcrio", "gloushstrest", "glousloand", "gloustfrock", "gloustlorncoar", "gloutcoust", "glouthnen", "glouthres",
    "gloutnean", "gloutshish", "glubrilnoarn", "glufior", "glulfeem", "gluljoash", "glulseel", "glumkee",
    "glumstroundree", "glundbrea", "glurnzulkio", "glurstroarn", "glurwosquush", "glusclound", "glushshothtrus", "glushwenbi",
    "glutfeath", "glutgessoath", "gluthsoath", "gluttriorn", "goackgeand", "goamloal", "goamshush", "goancheen",
    "goanheam", "goanpourbim", "goarnfurnstair", "goarnrior", "goarntaith", "goasgeack", "goastceen", "goastdoan",
    "goateas", "goathfain", "goathsu", "goatmaish", "gogroul", "gomfem", "gomnoun", "gomoand",
    "gomploack", "gomshuck", "gomstoust", "gonquouth", "gonsluck", "goplorn", "gornbliomglou", "gornbruth",
    "gornsnaind", "gorthior", "gorzist", "goscrean", "goshgeendsnorn", "goshsmeth", "gossoal", "gostkrain",
    "goststurn", "gotfoandtheas", "gotfraist", "gothspaish", "gothwut", "gotshast", "gouckhersmim", "gouckker",
    "gouckspend", "gouckspoam", "goujeack", "goulslearn", "goumsmiost", "goundmeern", "goundpeast", "goundriol",
    "goundsmeacknes", "gournzoam", "gourqueend", "gourstiond", "gousfroush", "goushchoa", "gouskiorn", "goustbruth",
    "goustnern", "goustrith", "gouthith", "gouthsest", "gouthvath", "goutreck", "goutsnish", "grackraitpeen",
    "graibiolbrio", "graidoush", "graildoukreack", "grailveath", "graindfam", "graindmeet", "graindriom", "grainuck",
    "grairnsnu", "graishski", "graishskosh", "graishzeer", "graiskouck", "graistbeern", "graistoam", "graistthoul",
    "graittrion", "graitweer", "gralcheettal", "gralgron", "gralmais", "gralsloast", "graltain", "gralzes",
    "gramquim", "grandpriom", "granglas", "granpeen", "granploack", "grarngleel", "grarnves", "grarrairn",
    "grarslash", "grashfrand", "grashgum", "grashklas", "grashzeemosh", "grastmoa", "grathdoum", "grathgeand",
    "grathsnim", "graththin", "gratquairflen", "greacksaindees", "greacksmarn", "greakroshdeend", "grealjoat", "grealthoundsni",
    "greamhust", "greaniock", "greapeck", "greasblin", "greasboand", "greashfriol", "greashfrosh", "greashfrouth",
    "greastrot", "greastskoar", "greathprion", "greatprarn", "greattock", "greckhour", "gredon", "greeckzio",
    "greefai", "greelshoth", "greelsmairn", "greemfaskon", "greemkoast", "greemmior", "greenclas", "greenmathsnon",
    "greepour", "greerbiol", "greerskeer", "greerskous", "greerspoas", "greeshsack", "greeshzuth", "greestrut",
    "greestwoan", "greeththosh", "gregesh", "greljal", "grelstrul", "grelwush", "gremcrir", "grendjainspoun",
    "grenmick", "grernbut", "grernfleat", "grernkeern", "grerzoan", "greshspeet", "gresnaiscloul", "grestcior",
    "grestgreas", "grestrash", "gretcroal", "gretfleern", "gretgoatweath", "grethclut", "grethsail", "grilsliorn",
    "grilspoast", "grinddoust", "grindneet", "grindtriorn", "grinrioshsait", "grinstoustsiom", "griocknun", "griockstrean",
    "griockstrour", "griomclosh", "griomfrait", "griomfras", "griommundcoust", "griondneen", "grionstrirn", "griorjaim",
    "griornkloush", "griornplom", "grioshtheath", "grioshwest", "griostspoatzee", "griothostflas", "griothsmaick", "grirnsnu",
    "grisjous", "grisputh", "grisriost", "grissleesgloa", "gristzoth", "gritblungom", "gritdru", "grithklim",
    "grithmir", "grithskos", "gritkiostsni", "gritshees", "groackton", "groalhoas", "groalthul", "groamkioten",
    "groamklond", "groandfait", "groandslout", "groarnsmenlast", "groarsketh", "groashsnonfin", "groaskliock", "groastspoam",
    "groatflan", "groathstairn", "grockbrunweat", "grokrirn", "grolquick", "gromfiorn", "gromfren", "gromgeesh",
    "gromsu", "gronkloand", "gronskelgour", "gronskus", "grosfoack", "groshkeer", "grossleemwil", "grotblath",
    "grotdeesklour", "grotkrail", "grouckmosh", "grouclarn", "groucliotcroal", "groulblee", "groulfeath", "groulrut",
    "groulstoulveam", "groundhoal", "grourchern", "grourkai", "grourkrand", "grournhou", "grournralgron", "groushfil",
    "groushgio", "groustgrair", "grousthu", "groustprond", "grouthclesh", "grouthpeesh", "grouthsas", "grulthemsloam",
    "grumbrel", "grumsles", "grundchoul", "grundpern", "grundtrund", "grurlour", "grurnfeer", "grurnkreen",
    "grurnnirn", "grurnqueer", "grurnsnack", "grusgurn", "grusheecktrair", "grushloand", "grusskick", "grutchail",
    "gruthmoast", "gruthneack", "grutkesslai", "gulnuth", "gumciosh", "gumfleel", "gumtu", "gunbostcroarn",
    "gundquoas", "gunfrosh", "gunglem", "gunind", "gunsmair", "gurgrith", "gurthick", "gusslais",
    "gusspor", "gustlis", "guststoas", "gusttet", "gutgleal", "gutha", "guthgu", "guthvat",
    "gutstrai", "guttoam", "hackchesh", "hackfloash", "hackkroackcai", "hacktriornklus", "haheth", "haigeest",
    "haimclearnouck", "haimsniot", "haindiockdrer", "haindkusclees", "hainkea", "hainkouck", "hairnskeer", "haisfendstrond",
    "haisglairn", "haishdreer", "haishpreck", "haishsist", "haishstrin", "haishzaick", "haistbroack", "haistdretwack",
    "haistgleendhem", "haistpis", "haistsmarvom", "haitbloam", "haitfosbrearn", "haithbliorn", "haithglafris", "haitsmoarbram",
    "haitvash", "halbrur", "halsnoulshan", "hamspai", "hamstraish", "hamstramthurn", "hamwornjeas", "harkream",
    "harskoun", "harwulzoarn", "hascroas", "hasfios", "hasflis", "hashcloalsairn", "hashthel", "hasplosh",
    "hastflios", "hastgeal", "hastkeackteesh", "hastshuth", "hatdraist", "hatind", "hatstotzouth", "hazircrast",
    "heabroth", "heajish", "healfrum", "heamcrourn", "heamsus", "heanflond", "heanpur", "heansmeand",
    "heaquairnjeern", "hearbistouck", "hearfrout", "hearnbleck", "hearskut", "heastdios", "heastdrorvaith", "heastoast",
    "heasvoush", "heatnim", "heatskum", "heattioth", "heckbo", "heckpleel", "heckstoum", "heecern",
    "heeckstust", "heemklerspath", "heemsmelkriorn", "heendpleer", "heendrur", "heerhoan", "heernbrorn", "heerndrouth",
    "heertheath", "heeshdrul", "heesshist", "heesslim", "heeszim", "heethgrim", "heethroth", "heethseas",
    "heethtrairn", "heetsteam", "hekrinstosh", "helfith", "helkloundjeas", "hemclithchor", "hemkrous", "hemmeernbliom",
    "hemsteas", "henfror", "hentheem", "hentrist", "hernthoth", "hesclear", "hesdast", "heshra",
    "heskir", "heslouck", "hestwom", "hetkloarlaist", "hickcreel", "hickvaickflan", "hilbleend", "hilbloack",
    "hilcleash", "hildar", "hilflist", "himcliorn", "himpind", "hindriom", "hiolniolnas", "hiomkioshgrind",
    "hiomkrern", "hiomseast", "hionbronchot", "hionjion", "hiorjios", "hiornsmair", "hiorpriotlot", "hiorwas",
    "hiosgloack", "hioshkreer", "hioskut", "hiosplais", "hiosttheash", "hiotgour", "hiowest", "hiplaick",
    "hirbin", "hirbrest", "hirkostshoarn", "hirnshund", "hirpreeckpriot", "hirpril", "hishplearn", "hisjarn",
    "hissmoathplost", "histdroa", "histlothvock", "histmeclus", "hitdoth", "hitfriock", "hitprouck", "hoackdand",
    "hoageesshout", "hoaldrosh", "hoalmeatprion", "hoamcleest", "hoamvil", "hoanblust", "hoancroa", "hoapel",
    "hoarnbickstea", "hoarncreamchot", "hoarndoth", "hoarpeal", "hoarrous", "hoarslaist", "hoarstrait", "hoasgreernvur",
    "hoashstra", "hoastbroarn", "hoatbicksmos", "hoathbick", "hoathpree", "hoathslasvir", "hoatplind", "hoatsiock",
    "hockfios", "hockheeck", "hockkliond", "hocktumsmoath", "holglearn", "holmoshcick", "holthor", "homjail",
    "homkreekrest", "honcaickqueen", "hondstrertern", "honkreeth", "hornfroabes", "horngleern", "hornkraist", "horspemsmand",
    "hoshfost", "hosspur", "hostgash", "hostnirgist", "hostplourn", "hostsnind", "hotfresvi", "hothpush",
    "hothslath", "hotmoack", "hotplinkat", "houlcaim", "houlcleestrel", "houlgler", "houlploutrol", "houlstaind",
    "houlstrous", "houlvot", "houmwiocksor", "hounbristbeal", "houndsheath", "hounlirdoarn", "hounskound", "hounthick",
    "hourgurn", "hournslion", "houscanchath", "houshchan", "houshdrel", "houstethzaith", "housthus", "houstnion",
    "houstplu", "houtclas", "houthpick", "houvorn", "houwas", "huckbrear", "huckfleend", "huckfreel",
    "huckfroanwee", "huckgrion", "huckplesh", "huckplirn", "hudist", "hulsoarn", "humflonsnout", "humfoundrus",
    "humsmouck", "hundtheast", "hunklum", "hurhamspeer", "hurkluckslus", "hurnsleen", "hurthourn", "hurvournsnoas",
    "hushpraist", "hushpru", "husthairgal", "hustkourn", "hutbleawou", "hutsloal", "hutsmeashar", "jackrish",
    "jafliock", "jaickboustrith", "jaimfliot", "jaimlil", "jaindjer", "jaindplioth", "jaindspoulcor", "jainsnem",
    "jairclit", "jairfleand", "jairgitweack", "jairnbos", "jairniocklu", "jairnstul", "jaisdou", "jaisdral",
    "jaishesh", "jaishmoth", "jaishsear", "jaishtrea", "jaishweath", "jaisklotwourn", "jaispearn", "jaissmashkrish",
    "jaistmio", "jaistrin", "jaitvit", "jaitzoumloack", "janbloshhea", "jandprast", "jandtound", "janfearn",
    "janwush", "jarheathclar", "jarnfleal", "jarnfril", "jarnlil", "jarnnouszouth", "jarplaish", "jashcouth",
    "jastroul", "jatfan", "jathnot", "jathtroal", "jathtrust", "jatklastkom", "jatsteendcran", "jeabrirn",
    "jeacksmist", "jeacksneand", "jeacrist", "jealhaishsteal", "jealsnind", "jealwir", "jeammot", "jeamspairn",
    "jeamstu", "jeamwith", "jeandsheel", "jeandspeet", "jeandtoun", "jeantoack", "jeanvou", "jearjeam",
    "jearncleesh", "jearque", "jearsnoas", "jeashsion", "jeasneekream", "jeassnain", "jeastblam", "jeastkeeth",
    "jeatfrir", "jeathgrionwi", "jeathrindben", "jeckplust", "jeeckkloat", "jeeckkrarn", "jeeckpleck", "jeeckspean",
    "jeefees", "jeelkroun", "jeellees", "jeembath", "jeemfeersnurn", "jeemtas", "jeenslaistjer", "jeerblum",
    "jeerclat", "jeerga", "jeerkor", "jeernkloundna", "jeernsmas", "jeernteest", "jeertairnbrees", "jeeshgrair",
    "jeeshnoth", "jeessnem", "jeethcras", "jeethgroast", "jeetslalbick", "jekras", "jemslain", "jendprouldut",
    "jernlound", "jerntrearn", "jesbrouthros", "jeshcrick", "jeshror", "jeshshim", "jeshthoan", "jestkroun",
    "jestrairn", "jethsarskeck", "jethtreathvaim", "jetpes", "jetstree", "jickfroa", "jicloar", "jiklond",
    "jimblas", "jimcrom", "jimtothsloan", "jincust", "jindtaick", "jinloar", "jiockbrost", "jiofish",
    "jioflesh", "jiolslom", "jiolthionun", "jiomchur", "jionprem", "jionzourn", "jioprea", "jiostdroal",
    "jiostdrous", "jiostfirn", "jiostreerval", "jiotciost", "jiotclith", "jiothcroarpeal", "jiothkosh", "jioththos",
    "jiotjeet", "jiotsnat", "jiowouthtock", "jiplend", "jirfroarn", "jirkain", "jirnkeeth", "jishtir",
    "jiskou", "jistbas", "jistgloust", "jitfeas", "jithzund", "jitna", "joabriol", "joackquou",
    "joacktim", "joaldroar", "joalgiond", "joallo", "joamclem", "joandpreat", "joandremgai", "joandsnorn",
    "joandtrear", "joanglearskeen", "joargoand", "joartroubrash", "joasfouck", "joashum", "joastnesh", "jockgun",
    "jockzoarn", "jolzaith", "jomdesh", "jomsnisfresh", "jondbust", "jonsiotgai", "jorflouthpoarn", "jornnou",
    "jornspeeglish", "jorquus", "jorsouck", "joshdiorn", "joshpleand", "josquush", "jostlet", "jotbreencreack",
    "jotdrack", "jotfro", "jothpouth", "jouckblouth", "jouckclur", "joulfrais", "joulklas", "joumband",
    "joumshornbrios", "joundsmaith", "jourblioth", "journfail", "journgreack", "jouscleest", "joushmen", "joustdrind",
    "joutgrund", "jouthzondkrind", "joutsmoust", "juckfebrees", "juclios", "judroufreer", "juldriock", "julmesh",
    "julsmumbrou", "jumfeas", "jumgrurpleern", "jumkeest", "jumzai", "jundsosh", "junheshkeast", "junwi",
    "jurnbeckdreend", "jurnshioth", "jushbloshsloth", "jushriol", "justneerskeash", "jutfroaldrorn", "jutgenddeel", "kablai",
    "kackfrea", "kackseern", "kagraind", "kaickfasziom", "kailsmouck", "kaimbrait", "kaimpustchoat", "kaimthailkou",
    "kaindboun", "kairreack", "kaishblischees", "kaishdrerneas", "kaishjoal", "kaishspos", "kaisneern", "kaistfeeck",
    "kaistvost", "kaitcrior", "kaithtreeck", "kaitkairnsta", "kaitsnaithdat", "kalfirn", "kanclour", "kansoam",
    "karcleen", "karndound", "karnfeel", "karnkeenddees", "karroan", "karshoathblath", "karskion", "kartheemfan",
    "kashglust", "katglothcin", "kathjoash", "kathkrond", "katrain", "katsnail", "keackslin", "keackthith",
    "keacranheat", "keaklus", "kealclealces", "kealstothpish", "kealtern", "keamthand", "keanclio", "keandbouth",
    "keandgrair", "keanspeck", "kearbreel", "kearsichith", "kearstrat", "keascur", "keasdrest", "keashdelkrail",
    "keashgloack", "keaskil", "keasplil", "keastbashplees", "keastchus", "keastdreshdea", "keastreckzol", "keasttios",
    "keatblom", "keatcreand", "keatshoust", "keatwios", "keeckkaick", "keeckkioth", "keecksnoust", "keeldream",
    "keelpri", "keelskoush", "keelspee", "keemhoas", "keenblat", "keensmais", "keerncleldast", "keerndioshluck",
    "keernishthuth", "keernmot", "keersheam", "keersli", "keesfrim", "keeshnaind", "keesstiomstes", "keestklath",
    "keetblearn", "keethdoun", "keetstuth", "kefaick", "kelgist", "kelprioth", "kemcrund", "kemslail",
    "kenmearndren", "kenroust", "kercick", "kerjest", "kernjoast", "kernweend", "kesfesh", "keshchoum",
    "keshfo", "kestmoundchean", "kestsean", "kethsmuck", "kethtrail", "kethzat", "ketjelquesh", "ketreath",
    "ketstee", "kickcroa", "kickflair", "kilzi", "kindsmunstoam", "kindthiol", "kinglend", "kinstrirn",
    "kiockpee", "kiockzeat", "kiompustjeand", "kiondfous", "kiondklel", "kiondpan", "kiornfraish", "kiorthioth",
    "kiosfleack", "kiostwack", "kiotfaspeand", "kiothais", "kiothdickgarn", "kiothtremtrail", "kiotmeern", "kirhash",
    "kirndrammir", "kisclun", "kisheen", "kishesrai", "kishplan", "kishvist", "kiska", "kissam",
    "kistcais", "kistcheend", "kistcis", "kistprumgrain", "kithcresh", "kitheathheem", "kitsnourn", "klackblos",
    "klackchom", "klackprist", "klackstreest", "klaibliost", "klaickloust", "klailnor", "klaimflond", "klaimprock",
    "klaimsheem", "klainbin", "klaindfosh", "klaiquuck", "klairfloar", "klairglouth", "klairnclounior", "klairnsoandmee",
    "klairprees", "klaisfoan", "klaisfom", "klaishnot", "klaishstrosvar", "klaishthoas", "klaissliost", "klaithsmel",
    "klaitslesh", "klaldeend", "klalflous", "klalkeamcroam", "klalskou", "klamfethseam", "klandsion", "klandvaick",
    "klanqueal", "klarnglean", "klarnniock", "klascaind", "klastriot", "klathcair", "klathfreend", "klathstal",
    "kleahoand", "klealees", "klealfendweern", "klealreck", "kleamfasglait", "kleamfiornske", "kleamshiotmoul", "kleanduth",
    "kleandvir", "kleanfirnno", "kleangai", "kleanjoarn", "klearndem", "klearnmourn", "klearnsland", "klearplest",
    "klearquar", "klearwouck", "kleaskrimtreen", "kleasnost", "kleaspoan", "kleathtree", "kleatploth", "kleatstrind",
    "kleckmoast", "kleeckfon", "kleeckklum", "kleeckshot", "kleelcrumdrait", "kleelhiot", "kleeltemstrur", "kleemlest",
    "kleemslock", "kleendblath", "kleendthees", "kleenflond", "kleenslozoan", "kleernwoun", "kleesceast", "kleeshliockses",
    "kleesleashgiom", "kleesneen", "kleesso", "kleestmock", "kleetclund", "kleetdainbreer", "kleethciscleer", "kleethfrean",
    "kleetlear", "klelnel", "klenash", "klendklaist", "klenplith", "klenzourcroas", "klerfoack", "klerniol",
    "klesgoat", "klesgreest", "kleshdourn", "kleshqueat", "klestcrun", "klestrond", "klethgruth", "klethpit",
    "klettriotbim", "klickdion", "klickkrous", "klickplish", "kliclor", "klimbeeckneth", "klinbleerneem", "klinddiosh",
    "klinhitvul", "klinplout", "kliockcheam", "kliockfleand", "kliockloalcrea", "kliocksmeesh", "kliokiom", "kliomhesfreast",
    "klionboand", "klionhomouth", "klionrinkust", "kliorchiol", "kliorkroash", "kliornchesh", "kliornsour", "kliorvoar",
    "kliossturn", "kliostbriol", "kliostclom", "kliotgleck", "kliotglern", "kliothgrush", "kliothpum", "kliotsmond",
    "kliotspest", "klirncloal", "klirnglom", "klirnquuck", "klisgrind", "klishdromthost", "klissoarn", "klistcoan",
    "klistgurn", "klithith", "klithklean", "klithprai", "klithstrind", "klithtush", "klitstor", "kloacern",
    "kloackfrend", "kloacksleeck", "kloackwend", "kloagoun", "kloallot", "kloalprurrend", "kloamgloal", "kloandwoack",
    "kloankrum", "kloansland", "kloarkle", "kloarndreash", "kloarnskom", "kloashdrios", "kloashock", "kloashsmeam",
    "kloastdon", "kloastseel", "kloastshust", "kloastzoar", "kloathspoa", "kloathvais", "klockbleat", "klockkrouck",
    "klockzam", "klodees", "klomprush", "klomwen", "klonguckplais", "klordrothstrir", "klornspom", "klosgeam",
    "kloshvearn", "klostplound", "kloststres", "klothspun", "klouckfam", "klouckgrash", "kloulfeth", "kloulfrond",
    "kloulkornliond", "kloumblailsnar", "kloumdoth", "kloumpim", "kloumspeck", "kloundash", "kloundbleer", "kloundirn",
    "kloundmam", "klounlernklist", "klounsmeem", "klounvith", "kloupreth", "klourkour", "klourndeel", "klourneack",
    "klournfaist", "klournmeast", "klournporn", "klouscath", "kloushtrosh", "kloushvet", "klouskos", "kloutcer",
    "kloutdrout", "kloutgreelbem", "klouthglitwus", "klouthveer", "klouthwur", "kluckgoas", "kludurn", "kluglearn",
    "klulhiorn", "klultroast", "klumcio", "klumgrourmiol", "kluncucktreck", "klurbleandfir", "klurcland", "klurwurn",
    "klusfleal", "klushnouth", "kluspus", "klustweack", "kluthche", "kluthir", "kluthreath", "koacksioth",
    "koalsmeersmet", "koalthum", "koandkeest", "koandsnut", "koandspat", "koanthoal", "koarpaindtun", "koartriom",
    "koashclound", "koashsteam", "koastpiond", "koathzoarn", "koatkeend", "koatprair", "koatsheend", "kockkloun",
    "kockthund", "kogreastthind", "kollend", "kolpreckves", "komfrios", "komsmoust", "kondplardrind", "konneelclou",
    "konseensund", "konwon", "korgreas", "kormeer", "kornfroand", "kosmastclur", "kosqueetshou", "kossteam",
    "kostis", "kothclom", "koubaist", "kouckbloun", "koucklim", "kouckshis", "kouckvoas", "koudrior",
    "koukaitleath", "koulbrean", "koundskios", "koungindsheend", "kourklat", "kournbris", "koursnoul", "kourtrio",
    "koushroalslur", "kouspreemkreat", "koustpioth", "koustrioshvoan", "kouthstaish", "koutplout", "krackwiock", "kracoat",
    "krafrail", "kraicea", "kraichis", "kraickgloar", "kraicksharn", "kraimcoathclet", "kraindclou", "kraindgliol",
    "kraindsmest", "krainlidees", "krainsmeeck", "krairclem", "krairnloack", "krairnnend", "krairntorn", "krairprit",
    "kraishbund", "kraishfrat", "kraishmir", "kraishplain", "kraishsmend", "kraisklonclath", "kraismeegul", "kraismom",
    "kraispeer", "kraithfush", "kraithleen", "kraitsteat", "kralsmai", "kramciosh", "kramske", "krandbloudost",
    "krandstru", "kranut", "krarsmirn", "krartrairn", "krashslaist", "krasneernspai", "krastgluck", "krastind",
    "kratfith", "krathdouck", "krathdroul", "krathstiond", "krazorn", "kreacksairn", "krealwith", "kreambeth",
    "kreamfreesh", "kreamfrin", "kreamlas", "kreandcaim", "kreandskeast", "kreanfru", "krearnkest", "kreashbrest",
    "kreashfreel", "kreashplar", "kreasquast", "kreastclaind", "kreastdoust", "kreasttrion", "kreatdrinciorn", "kreatras",
    "kreckbaish", "kreckhin", "kreckjeel", "krecksmen", "krecksteck", "kreclail", "kredear", "kreebleeth",
    "kreeckthior", "kreefland", "kreempioth", "kreendplecklem", "kreenshos", "kreernsha", "kreerthearn", "kreervain",
    "kreesclait", "kreesfan", "kreestboaseen", "kreethcound", "kreethdroun", "kreethgrastsna", "krelsnoun", "krendfraith",
    "krendviond", "kreniorler", "krenklond", "krenprat", "krequol", "krerfoan", "krernsun", "kresbre",
    "kresglush", "kreshathhan", "kreshjeas", "kreshskeamplar", "kreshsnaish", "kresmoast", "krespeethnio", "krestweel",
    "krethtiom", "krethtout", "kretmishreand", "kretstroal", "krewer", "krickclack", "krigrit", "krilgreack",
    "krilleeck", "krimgain", "krimneem", "krinstreeck", "krinzeldrest", "kriockspit", "kriomquothdios", "kriomsket",
    "kriornprus", "kriorntee", "kriorshiom", "kriosgleck", "krioshsheat", "krioshslio", "kriossmand", "kriosstrith",
    "kriostcrosh", "kriosttrean", "kriothsoas", "kriotpea", "kripliock", "krirgreer", "krisgrascreack", "krishflulbun",
    "krishful", "kristfaimeack", "kristfleal", "kristjioth", "kristlothcal", "kristnion", "krithhor", "kritprast",
    "kritruck", "kritwiot", "kroafoat", "kroalgairn", "kroalklees", "kroalom", "kroamround", "kroandgrean",
    "kroanoar", "kroaskloal", "kroastweeck", "kroathcleack", "kroatsaish", "kroatsteswoas", "kroatvees", "krockfeern",
    "krodroul", "krolgreeth", "kroltan", "kromjeest", "kromneam", "kromwist", "kronche", "krondkoand",
    "krondshios", "kronnee", "kronskoash", "krorchionseam", "krornslain", "krornston", "krosbinkeen", "kroshjesh",
    "kroshspoan", "krostcend", "krotbeth", "krotblio", "krothkrum", "krothshair", "krotstal", "krotwutcha",
    "krouckblim", "kroulcoat", "kroultreash", "krounat", "krounblor", "kroundgrand", "kroundroust", "krounstreal",
    "krountrock", "kroupeand", "krourkrarslust", "krournpuck", "krourplut", "krousearn", "krousflearhush", "krouthchirn",
    "krouthkoarn", "krouvush", "kruckqueath", "krulspat", "krulweack", "krumpresh", "krundjeat", "krundpar",
    "krurnbroal", "krurnfeern", "krurnkloam", "krurnrush", "krurnskion", "krurnsmoar", "krurprush", "krurvamvond",
    "kruskaist", "krusmoas", "krusthon", "krustrir", "kruthhoum", "kruttairn", "kulpleesh", "kulstreandlais",
    "kumpenkre", "kumsteettouck", "kundgli", "kungai", "kuplosttroack", "kurklear", "kurnesnend", "kurreathclur",
    "kushglan", "kusjon", "kuspearn", "kustvi", "kuthchin", "kuthfras", "kuthtrean", "lackfoas",
    "laickcund", "laickskoand", "laicksmaick", "lailam", "lailspirn", "laimcrend", "laimklar", "laimsteet",
    "laindklath", "laingleal", "lainnoumpairn", "lainthen", "lainweern", "lairnkarn", "laischond", "laishgrosh",
    "laishquoa", "laishstrarn", "laistquiot", "lalbeesh", "lalvit", "lalvond", "landstrendge", "lansloamio",
    "larframstoam", "largiostwiorn", "larncraick", "larplurnklel", "larres", "lashquoam", "lashthan", "lashveast",
    "lasslat", "lastbloash", "lastleer", "latcoatfleand", "leackfleern", "leackkeas", "lealfreem", "lealheen",
    "lealsnor", "lealworn", "leandjee", "leanfresh", "leanklen", "leanstam", "learflil", "learnclil",
    "learncrast", "learsnoush", "leashcheern", "leashthoalzust", "leashvublaist", "leastcion", "leatfliom", "leathshuthfril",
    "leathspet", "leattroand", "leatviot", "leckcreanqueet", "leckgleck", "leeckclouliock", "leeckplitpiorn", "leelheem",
    "leelpoast", "leendgroust", "leendshouth", "leentrossnaim", "leerboust", "leernsnoat", "leeshsmaind", "leestgroar",
    "leestplim", "leesun", "leethdundrai", "leetsul", "legreern", "leklernslous", "lelnoas", "lelsmain",
    "lemfround", "lemnoshsnoun", "lenbloat", "lenskeastshun", "lernsnit", "lerploas", "leshclan", "leshdrath",
    "lespaist", "lessturn", "lesvistsmind", "lethbrouck", "lethtorn", "letpu", "lichern", "lickwul",
    "likrur", "lilchith", "lilstrit", "limchen", "limdeath", "limnea", "lincloand", "lindflurceth",
    "lindthes", "lioboast", "liockflunquen", "liockgroush", "liockveeck", "liogail", "liolspoan", "liomse",
    "liomwiodoast", "liondpleestpon", "liornkiorout", "liornpul", "liornsmound", "liorskash", "liortrean", "liosbrergiond",
    "liosflom", "liostbiorn", "liostclaist", "liostthoam", "liotdecktrum", "liothdrourn", "liothkoul", "liovur",
    "lirfruzo", "lirnmou", "lisgoas", "lishstroulslem", "listhethcound", "lithtor", "litpuck", "liwirshiorn",
    "loackclean", "loackdreesh", "loamjoth", "loanddest", "loandrais", "loankainluth", "loansmaith", "loansmeer",
    "loarngrealtul", "loarnneeth", "loarnprith", "loarnquaick", "loarnveethjiol", "loasclur", "loashshoar", "loashwil",
    "loastbleand", "loastgloath", "loastgloush", "loatbast", "loatgrurn", "loathcioshlast", "loatkrioshsmit", "lockglir",
    "lockheeth", "lockloastchack", "lomtesh", "lomwir", "londcrioth", "londfreel", "londsmair", "lonkim",
    "lopleastdrul", "lorstailul", "losbiost", "loshreand", "loskreack", "lothnoush", "lothplackblis", "lothprairn",
    "lothshunzurn", "lotklaim", "louckflond", "lougoasquout", "loulfrind", "loulheersnairn", "loulkliorvouck", "loumcel",
    "lounmeest", "lournnom", "lournol", "lourpoash", "loustbior", "loustgoast", "loutdom", "loutdrilskairn",
    "luckbishprash", "lucreest", "lulskut", "lulsoamtesh", "lumgrekroand", "lumplost", "lundles", "lundlound",
    "lundquoas", "lunlut", "lunquoalstios", "lunund", "lurkoan", "lurnbroandnund", "lurnflout", "lurnsharn",
    "lurpish", "lursios", "lushkland", "lushstiost", "lushstrond", "luspurvick", "lustsiom", "luthleprosh",
    "luthtuthsond", "lutra", "mackshu", "macktoush", "magrush", "maickbloungrul", "maihoucksick", "mailsnoast",
    "maimhundtraick", "maimsmior", "maimstour", "mainblailcrus", "maindshu", "maindsteel", "maipeas", "mairnfack",
    "mairntheel", "mairshoash", "mairshund", "maishbuck", "maishflal", "maishstais", "maislur", "maistzen",
    "maithcleen", "maithgouck", "maithquir", "maitsteenclath", "malprust", "mamdrirret", "mamplisklaick", "mamtrurnnourn",
    "manbus", "manchul", "mandbick", "manddreamkles", "mandjind", "mandpas", "manklut", "marfrioth",
    "marnviothceern", "marpruth", "maslurbloul", "mastgiosgreet", "mastral", "matfroath", "matgrous", "matjeend",
    "matshon", "matsmom", "matthesh", "meamchil", "meamloum", "meandgloum", "meandkrelrais", "meanshatkeack",
    "meanstraist", "mearnfrir", "mearntras", "meashprem", "meashsous", "measmeempriom", "measpri", "meastsmandcous",
    "meathkarn", "meatmeend", "meckcloa", "meckfrothquior", "mecksios", "meeckpaick", "meeckpist", "meemdrend",
    "meemjeer", "meendhaish", "meenpoun", "meenquornkruth", "meerther", "meesgiond", "meeskroat", "meestil",
    "meestroun", "meestsnoan", "meetgrus", "meethand", "meethfrees", "melchackstin", "melkriolsmeen", "memdand",
    "mendcrom", "mequol", "merclarn", "merclin", "mereemsmit", "merntres", "merstiorn", "mestbrund",
    "methfait", "methkeeth", "methmupros", "methskait", "metkarnlous", "mettron", "mickskios", "mifluth",
    "milpoan", "milstustkioth", "milthesdrer", "mimfour", "mimgrastnest", "minblou", "mindskirn", "mindstrais",
    "mindstrour", "minsloush", "miockfean", "miockklirn", "miokleendstrim", "mioldel", "miolgla", "miomcirntreack",
    "miomdee", "miomhaindcloan", "miomspith", "mionfairn", "miorbounklaick", "miornplern", "miornsleer", "miorstrean",
    "miosmin", "miospret", "miostjoandplus", "miothquen", "miothsneth", "miotsnon", "miottet", "mirnfakrear",
    "mirnreck", "mirtouth", "mishbrern", "mishkitpios", "mishnaistvi", "misslean", "missmaickreat", "mistkleem",
    "mitmeend", "mitwuth", "moalshoast", "moalstol", "moalwarn", "moanddoul", "moandspourn", "moanglahairn",
    "moankiot", "moarnsloust", "moashban", "moashroth", "moashthair", "moaskus", "moasmos", "moassmous",
    "moastflandmel", "moathaist", "moathreenfland", "mockkleeck", "modarn", "mogroarn", "mondbreel", "mondclouth",
    "mondstefur", "montreas", "mordrourjoast", "mornbleal", "mornrern", "morples", "moshfetcand", "mosmistdain",
    "mostjouspluck", "mothjorn", "motshoan", "mouckcot", "moucktea", "moufreenddret", "moulbeack", "moulkrornzoath",
    "moulpaith", "moumdindstril", "moumfletseem", "moumfrosnel", "mouncrioth", "moundneack", "mounjarn", "mounpack",
    "mounstren", "mournsmeam", "mourntean", "mourpreersliom", "moushthus", "mouspeem", "mousshu", "moustroustroum",
    "mouthbleesh", "mubreem", "muckleamgroast", "muckmiondkash", "muckskin", "mulfroan", "multreand", "mumest",
    "mumsmound", "mundclim", "mundroar", "mundskund", "murnbrund", "murnkloam", "murnsnirn", "murplees",
    "murqueesh", "musfran", "mushfrack", "mushglound", "mushpash", "mushprous", "mushshel", "muspoarngaick",
    "musthiom", "muststist", "muthbliorncren", "muthflot", "muthnind", "muthpaish", "mutzeeth", "muvour",
    "nackgrouck", "naickbroufean", "naickfith", "naickgoust", "naicktriot", "naickturn", "nailclas", "nailgiorslus",
    "nainprick", "nainsmond", "naintroal", "nairleack", "nairnblais", "nairnfouck", "nairtee", "naishdick",
    "naishpreamler", "naisnioth", "naistjeas", "naistpuck", "naitclotteath", "naithmiol", "naithsnurnstis", "naithtuscrearn",
    "naljeast", "nalprea", "nalstearn", "namthioshteesh", "namtrionsor", "nanmeest", "narskeet", "narstrio",
    "naskriolfoas", "nastgres", "nastkloast", "nathmish", "nazush", "neackcreal", "neacksas", "neacksmoum",
    "nealdeest", "nealglait", "nealsmair", "neamen", "neamgrir", "neamzousgroan", "neanchir", "neanleand",
    "neapern", "nearflum", "nearnbiock", "nearnzealbram", "nearplith", "neasdaind", "neasgra", "neashcheesh",
    "neashgrouck", "neashind", "neashkraist", "neashpaind", "neastkrascet", "neastput", "neastveas", "neatheam",
    "neathkemsleet", "neathkrees", "neathsnam", "neckkour", "neeblockquoath", "neecklear", "neecksta", "neekut",
    "neemklaish", "neenfloast", "neengous", "neerhour", "neerkrios", "neermoar", "neernpleet", "neernsteesh",
    "neeshjoas", "neeshmou", "neethtro", "neetquum", "neetreestfreen", "neetzoath", "negloasnoack", "nelcecush",
    "nelfeeck", "nelsnurn", "nemfrair", "nempround", "nemrer", "nendsteal", "nendthiorn", "nenjan",
    "nequus", "nernraind", "nernsneck", "nesblond", "nesglait", "neshaist", "nestgriot", "nethfeedroath",
    "nethniockcost", "nethskom", "netmais", "nickkiostproum", "niflourn", "nilfasblat", "nilflousttrit", "nilpon",
    "nimbrim", "nindsam", "niockcoust", "niockdre", "niocksnam", "niolbrest", "niolgroath", "niolspuck",
    "niomplaind", "niondkait", "niondkrind", "niondroat", "nionshio", "niorlit", "niormist", "niornfezeel",
    "niornpramdrist", "niorvaick", "nioshdoath", "nioshflanskun", "nioshpous", "niosleaclack", "niossmean", "niostcheth",
    "niostrer", "niostsouth", "nioswaszo", "niothmend", "niothpur", "nirdeen", "nirdriost", "nirklis",
    "nirnflamtrouck", "nisblund", "nishgrerfeesh", "nishwoath", "niskrourdrim", "nistheack", "nistjoanquoun", "nisziommeeth",
    "niththenbond", "nitspothskoand", "noackloack", "noalboanzearn", "noalproal", "noalsmust", "noamkran", "noamstuckqueck",
    "noanddith", "noandgroam", "noandsloarnben", "noardou", "noarklast", "noarnfleal", "noastnean", "noatgoash",
    "noathloum", "noathtreash", "noatrut", "noatvurnfreth", "nockpoth", "nockwin", "nolbackwis", "nolband",
    "nolkeelproand", "nolsmound", "nomgea", "nondgloal", "nonploul", "nornvethsnun", "nornvus", "nosbrour",
    "noshglaist", "noshkroath", "noshrit", "noshsla", "nossnaist", "nostkleeth", "noststiom", "notchoashput",
    "nothboast", "nothbristrum", "nothkloa", "notpeat", "noubrorn", "nouckkot", "noucoam", "noulciordrock",
    "noulhoucliom", "noulslel", "noulstur", "noumdind", "noumpleawosh", "noumstrast", "noundriostesh", "nounstas",
    "noupai", "nouquund", "nournstion", "nourtrondspour", "nousbionjuth", "noushleand", "noushlund", "nouslack",
    "nouthblolzio", "noutheern", "nouthoast", "nouthsmeamsin", "nouttheesh", "nuckjiom", "nuckquand", "nujait",
    "nulfond", "nuljissmaim", "nulzosroum", "numciost", "numfluck", "numspoan", "nundcast", "nundflem",
    "nundkrar", "nundstiosh", "nunshoalchear", "nurkair", "nurnkion", "nurnsouckplain", "nurnthoush", "nurqueth",
    "nursat", "nuschind", "nustdoarn", "nustheern", "nutbream", "nutbree", "nutgroan", "nuthsnustvosh",
    "nutrot", "nutshirngraick", "nutthern", "packfern", "pailchastquul", "pailleem", "paimfeend", "paimfeer",
    "paimfrurn", "paimgruttru", "painprear", "paiplos", "paisbream", "paishboun", "paishsiond", "paishthum",
    "paisock", "paistpland", "paistshoar", "paithglin", "paitklir", "pakouck", "palbli", "palplunrees",
    "pancrust", "pandpes", "parnsneeckbeat", "pashflothbeack", "pashpraimirn", "pashsim", "pasttroat", "pathet",
    "pathroash", "patpol", "patslain", "patsmoas", "pawon", "peackceath", "peackstust", "pealveernceet",
    "peampeam", "peamsoa", "peamtiomgleash", "peandblash", "peandcrour", "peanvarn", "pearho", "pearhost",
    "pearnblusmern", "pearntraith", "pearrouck", "pearsest", "peasgoal", "peashbratsmot", "peashpondru", "peasjum",
    "peasplin", "peaspou", "peastrit", "peastslom", "peastvoath", "peastwaish", "peatbas", "peatsouck",
    "peckgraick", "peckrou", "pecktin", "peechernsund", "peeckfu", "peeckjurbres", "peecuck", "peelthim",
    "peembloam", "peemsleath", "peendgrish", "peendnem", "peendviomkroar", "peenfleer", "peenlou", "peernbroath",
    "peerquioth", "peerson", "peertous", "peescrios", "peeshkain", "peeshshoal", "peeshtist", "peesmoumtrut",
    "peesthiosh", "peeszoshclar", "peetbeel", "peetfrios", "peethtound", "pejeat", "peldiotpeern", "pelteesh",
    "pemdrokath", "penboam", "pendvionsnen", "pendvoth", "pengroalsor", "perceesh", "perkoast", "pernbreen",
    "pernfleem", "pernleash", "pernpriorn", "peshchail", "peshconskiock", "peshmees", "peshstirtraish", "peslom",
    "pestgloust", "pestslelspest", "pesttios", "pesttreensat", "pethquecksiost", "petsmust", "pettrith", "pickheam",
    "pilcrornquem", "pilquith", "pilslom", "pinham", "pinskaim", "piolgiock", "piomsmoack", "piondait",
    "piondbrir", "piondlourn", "piondsheal", "piondsloack", "piondvo", "piongruthskoam", "piorhand", "piorndrothfrer",
    "piornkeath", "pioshpreern", "piosnes", "piospioth", "piostproush", "piothquest", "piothsmim", "piothsniol",
    "piothstel", "piothwon", "piotplut", "pirkleal", "pirnlan", "pirnplouth", "pisclaircloa", "pisgoasfleest",
    "pishkroul", "pissluret", "pistblos", "pistfoal", "pistglest", "piststreen", "pitdous", "pitflemblan",
    "pithee", "plackcreend", "plackspis", "plaickdro", "plaickzou", "plaicost", "plaifor", "plailcait",
    "plailsmeal", "plaimcalfol", "plaimslut", "plaimsniock", "plaimundgluth", "plaincrean", "plaindkeam", "plaindklorchu",
    "plaindtithfru", "plaipiorn", "plairnkriock", "plairnneam", "plaisbroash", "plaischeel", "plaishgleem", "plaishpiocklas",
    "plaishpios", "plaistgla", "plaistgloat", "plaithash", "plaithstor", "plaitrack", "plalflel", "plalmair",
    "plalsmearslun", "plalstu", "plandcaind", "plandthairn", "plarndiorquoat", "plarngreest", "plarnwesh", "plasclourn",
    "plashhail", "plastro", "platgrorn", "plathsenzeand", "plathshouth", "plathtreack", "platmis", "plaziond",
    "pleaglu", "plealtrou", "pleamsaith", "pleanchund", "pleandsnost", "plearntioshtel", "pleaseck", "pleashcrupash",
    "pleashgrea", "pleashgrut", "pleaskiot", "pleaslil", "pleastbeendpas", "pleastflo", "pleatgor", "pleathshem",
    "pleatquel", "plebun", "plecktet", "plecloas", "pleeckbrit", "pleelbree", "pleeldor", "pleelkreem",
    "pleelsteeth", "pleemclou", "pleendfloarn", "pleendkroa", "pleendpiockfou", "pleenion", "pleenslout", "pleenspes",
    "pleentrio", "pleernlior", "pleernspeath", "pleeshkreet", "pleesrar", "pleestcraith", "pleesvearn", "pleetcrio",
    "pleethrir", "pleethspist", "pleetskeetsher", "pleetslee", "pleljaim", "plelpail", "plelsmescrast", "plelsmoukrairn",
    "plendthom", "plenreast", "plenstrith", "pleplair", "plerdroush", "plerfrit", "plernchees", "plernse",
    "plernstros", "plerskesgeast", "plesdraist", "plesjeack", "plesttrut", "pletdroum", "plethspeand", "pleththo",
    "pletsporn", "pleveam", "plickstrum", "plilspioth", "plimlean", "plimplon", "plindroul", "plinsnal",
    "plinzistkrairn", "pliockci", "pliofrearn", "pliolgrior", "pliolpeast", "pliolshast", "pliomblurn", "pliomdearn",
    "pliomtatfios", "pliondtrond", "plionstrees", "plionthest", "pliorkros", "pliorndoarn", "pliornnem", "pliornstra",
    "pliorsnel", "plioshblait", "plioshjour", "plioshtoul", "plioshtreal", "pliosleeckdeel", "pliospimbliosh", "pliossloal",
    "pliostnur", "plioststrean", "pliothtrairn", "plipiock", "plirfern", "plirnforous", "plirnproth", "plirnspaick",
    "plirsnoushfrut", "plishfistglout", "plishwiost", "plisklar", "plisshai", "plistsnait", "plithoas", "plitlulkur",
    "plitvealpain", "ploacktos", "ploagairpleeth", "ploalclinprarn", "ploalgeathsi", "ploaliost", "ploamhion", "ploamskapliosh",
    "ploarnchea", "ploarnstrion", "ploartiotflior", "ploasblit", "ploasdeth", "ploashkest", "ploasnais", "ploasnastweack",
    "ploastcroam", "ploastdind", "ploastpond", "ploastshout", "ploathgroul", "ploathplourn", "ploatnoulgum", "plockchair",
    "plockdoam", "plockzoath", "plomdroat", "plomiost", "plomskos", "plomtreethpal", "plondneet", "plondzeem",
    "plonhi", "plornbrout", "plornsnoum", "plornwiond", "plorprum", "ploshcrea", "ploshgrarn", "ploshkleast",
    "plosshout", "plostblen", "plostgrick", "plostrencreath", "plotcreeth", "plouckbrear", "plouckgaikrut", "plouckspus",
    "ploucktraifla", "ploucktrust", "plouldroash", "ploumnoasrour", "ploundclel", "ploundpea", "ploundworzand", "plourmeer",
    "ploursiomkos", "plouscuckgloan", "plousfoth", "ploushpush", "plousloas", "plousreath", "ploustbeckflee", "plouthbroas",
    "pluckgrethdosh", "pluckskom", "pludalcraick", "plukrairn", "plukroand", "plumgreck", "plumkliot", "plundsmio",
    "plungroulbiock", "plupriol", "plurbaist", "plurnfrastheer", "plurngaist", "plurthait", "plushos", "plushspeeck",
    "plustdeel", "plustfash", "plustprournsol", "plustvath", "plutpler", "plutsnir", "poacoarn", "poalskaith",
    "poandoaskleast", "poandveerndo", "poardoan", "poarnbroarn", "poashmeal", "poashorn", "poashshainpiol", "poasplorn",
    "poastblock", "poastdoash", "poastmirn", "poastmos", "poastreest", "poathcleen", "poathkath", "pockclout",
    "pockfotrail", "pockstairn", "podrer", "pokloust", "polgaish", "polruck", "polsland", "pomsnoust",
    "pomtios", "pomzaish", "pondkean", "pondzashkland", "ponvoack", "poprurn", "porcraickshout", "pornpeshmaind",
    "porsa", "poshtheth", "poshthoulneern", "posprur", "postshio", "postthios", "pouckcron", "pouckproaplo",
    "pougoumsmat", "pouhom", "poummoash", "poumtrest", "poundcrou", "poundkleath", "poundmoash", "pourco",
    "pournbashcres", "pournstreem", "pournther", "poursko", "poushriock", "poushslaist", "poushthi", "pousnoul",
    "pouspleand", "poussnios", "poustcroust", "pouthwan", "pouthzirnkeal", "prabrournquit", "prackthind", "prackwoust",
    "praickkast", "praifashruck", "prailpimdaick", "prailpio", "praimcreelslio", "praimjound", "praimslind", "praimstron",
    "praindstrain", "prainnick", "prairncloast", "prairnsteern", "prairrou", "prairsteend", "prairthair", "praisches",
    "praishblest", "praishsnar", "praisshunu", "praithmear", "praizeck", "pralskelkroas", "prandfloas", "prandthat",
    "pranhol", "prannu", "pranzickvain", "prarnkrouck", "prasbroust", "prasclist", "prasglirn", "prashtoustjem",
    "prastblaick", "pratcisspeesh", "pratgoack", "pratteesh", "preackgrar", "preacktheal", "preackzund", "preadoa",
    "preajeck", "preajemchear", "prealjoar", "prealrul", "prealskoal", "preamrior", "preamtharn", "preangrain",
    "preanza", "preanzoul", "prearnbishfroa", "prearngriot", "preasdan", "preashpiosh", "preashslouck", "preashstest",
    "preaslin", "preasproa", "preatgroack", "preathboand", "preathtioth", "preckchi", "preeciom", "preeckquath",
    "preecktoath", "preefin", "preelchiorn", "preellam", "preelstrin", "preendbroal", "preenddeern", "preendrastshin",
    "preerliol", "preernvick", "preerprethspen", "preerskoarspen", "preescreesh", "preesguck", "preeshpoast", "preeshsnourn",
    "preesmack", "preestthut", "preestzain", "premchandtrous", "premmet", "premvust", "prendtrurn", "prengal",
    "prerclarn", "prernloand", "prernspee", "prerntu", "prerspeend", "preses", "presgla", "preshsmound",
    "presspoulfrour", "presstrolsker", "prestneash", "pretdroaszees", "pretfain", "pretflur", "prethkailsoast", "prethziommoas",
    "pretklout", "pretste", "prezeeck", "prickbeack", "prickveern", "prihiol", "prildresh", "prilwath",
    "prilzoast", "primsloust", "primstrais", "prindfram", "prindthiond", "priockfion", "priolche", "priomsintroand",
    "priomzeastsum", "prionbal", "prionblarn", "prionca", "priondsneapron", "priondstairn", "prionsun", "priorhounveet",
    "priormosdaish", "priornpond", "priosbiond", "priossleakleel", "priostquiol", "priosweeth", "priotclul", "priothheest",
    "priothwust", "prirpaitor", "prirtroas", "pristem", "pristspesneen", "pritcheam", "prithblest", "prithspish",
    "pritmesh", "proadoath", "proalfleas", "proaltrut", "proamdosh", "proamklos", "proamspeern", "proanblai",
    "proandstraim", "proandweendrer", "proanvair", "proarglelzeeck", "proarnsoast", "proarplond", "proasbriol", "proastblio",
    "proatdiol", "proatdrum", "proathsturn", "probrouck", "prockbirn", "proclatstris", "prolcrearn", "promcronthound",
    "prondkroan", "prornkior", "prornstreast", "prorturn", "prosfam", "proshgoash", "proshtrousten", "prosjern",
    "prossteest", "prostbrol", "prostflion", "prostkairn", "prostsmutbus", "prothbreer", "prothploas", "protpost",
    "protstrour", "prouckcair", "proulfrirn", "prouljun", "proulmeeschick", "proumblastgril", "proumneen", "proumquoarn",
    "proumspai", "prounbloutmosh", "proundjinbloum", "proundmeash", "proundpreesh", "proundsnam", "prournquoar", "prournquut",
    "proursou", "prourzoack", "prousfolshouck", "proushqui", "prousles", "proustthoand", "proustvais", "proutdeack",
    "prouthkotstend", "prouthsmoun", "proutqueack", "proutsal", "pruckblosh", "prucksloash", "prufloam", "prulfetgriost",
    "pruliol", "prulstiot", "prumlaick", "prumstreckpat", "prunkresh", "prupreal", "prurto", "prurtroand",
    "prustgearn", "prustkeern", "prustploust", "prustsher", "pruststoal", "prutfleash", "prutgeelpurn", "prutglosh",
    "pruthgleack", "pruthoam", "pruthvoun", "puckzouth", "pulnithta", "pulpraish", "pulsal", "pundcougream",
    "pundo", "pundskost", "punsmou", "purdrit", "purfai", "purnhou", "purnkriock", "purnpeest",
    "pushdios", "pushmuth", "pushspeast", "pushstast", "pushstrirn", "puspond", "pustruck", "putbe",
    "putcreas", "puthpindprend", "putshiock", "putsoth", "putstrion", "puttirseem", "quabrest", "quackshuquous",
    "quacksith", "quackskirn", "quaickfand", "quaijinwush", "quailbleest", "quailbrul", "quailkral", "quailvo",
    "quaimstreer", "quaincee", "quainclion", "quaincreck", "quaindcler", "quaindmam", "quainmon", "quaintheat",
    "quairglickjin", "quairquiost", "quairwea", "quaishdream", "quaishsniot", "quaistfrun", "quaistklostfot", "quaistplal",
    "quaistwol", "quaistzul", "quaithshin", "quamzoscroath", "quandroand", "quantrulspoast", "quarceash", "quargon",
    "quasbaimplourn", "quasbrut", "quasdo", "quashiostnait", "quashpeel", "quaskreand", "quastcrith", "quastjurn",
    "quatbriomgrast", "quathblee", "quathbleel", "quathblush", "quathfroth", "quathjoalveth", "quathoash", "quatsmoamceel",
    "queackprais", "queacrut", "queaklim", "quealquitthond", "queamcrist", "queammeack", "queandmarn", "queandnem",
    "queandrion", "queandsti", "queanwear", "queaplee", "quearbeam", "quearkessmound", "quearngais", "quearnstund",
    "queashcleend", "queastchet", "queastzoum", "queasvaind", "queasvist", "queathblioth", "queathshaind", "queckbeet",
    "queckthou", "quecktrar", "quecretcrash", "queeblom", "queeckgrion", "queemples", "queendkeern", "queendvus",
    "queenneal", "queergornglol", "queerlairnsken", "queernflirn", "queeshdraim", "queeshmeash", "queestflul", "queestmiorsti",
    "queestoum", "queethdrees", "queetmailbrurn", "queetstior", "queetur", "quemkruck", "quemzaipu", "quendflawush",
    "quendfoarn", "quendzan", "quensnealskeem", "querntoandzu", "queshpourmock", "queshvish", "questsloustrir", "quethjarnmous",
    "quethjee", "quethprust", "quickvou", "quilgloapeal", "quinddrios", "quiockmean", "quiogrend", "quiolsi",
    "quiolskaim", "quiomtioth", "quionceel", "quionstim", "quionthio", "quiontraisoast", "quiorhath", "quiorncleack",
    "quiornfickwust", "quiornvigouth", "quiorslond", "quioshcloath", "quioshteash", "quiosmairn", "quiostack", "quiostcam",
    "quiostcrees", "quiostcroul", "quiostjoarn", "quiostom", "quiothnoum", "quiothspeat", "quiotmait", "quiotthourn",
    "quirnbish", "quirnbrurn", "quirncluthslan", "quirnklolgu", "quirstrairn", "quishteas", "quispreeth", "quiststoack",
    "quithclait", "quithdrothpoun", "quithprainwous", "quithsish", "quithstrack", "quitsmaind", "quoackhern", "quoackshoust",
    "quoamqueat", "quoandprun", "quoansmoust", "quoanstaim", "quoarncoawem", "quoarnproan", "quoarwiol", "quoarzu",
    "quoassiorn", "quoatbream", "quoathdashbuck", "quoatplethpio", "quoatstoul", "quockkeem", "quomish", "quoncishthind",
    "quondleencish", "quonspoun", "quonzoar", "quoprend", "quordiontrack", "quornquolgiock", "quorslus", "quosglem",
    "quothvan", "quouckchound", "quouckka", "quoucklee", "quoucksheam", "quoulbresh", "quoulsonfloust", "quoulstrutslai",
    "quoumdrebrea", "quoumgrast", "quounair", "quoundgoth", "quounslees", "quourgrous", "quourncrouth", "quournfreal",
    "quourresh", "quoushkrend", "quoushkros", "quousloar", "quoustres", "quouthkaith", "quoutnom", "quoutsmeack",
    "quucktheatneas", "quulflior", "quumdrond", "quummor", "quumpiot", "quunblil", "quundprosh", "quunfrio",
    "quungruth", "quunpea", "quunpoar", "quurglogle", "quurnjoum", "quurnzai", "quushleeck", "quushut",
    "quushvistgroan", "quustbeash", "quustchoat", "quustkoast", "quustsnoush", "quuthstiol", "quuthstreast", "quutzeanplai",
    "rableathock", "rackblost", "rackroun", "racktra", "ragoth", "raickskoarn", "raildoarn", "raimsnaickclir",
    "raindcroash", "raindfrear", "rainquiol", "raiparn", "rairfeck", "rairnskoan", "rairnslioshfem", "rairthoul",
    "raiscreest", "raisfiond", "raishlouthsker", "raismeas", "raistbashbrut", "raistnee", "raitbios", "ralbomkream",
    "ralleen", "ralmaishiorn", "ralsmais", "rambournzond", "ramkorn", "randgoack", "randvos", "ranglulstoat",
    "rarblor", "rarmoal", "rarnthee", "rarskam", "rartroar", "rashwousclet", "rasjis", "raskrur",
    "rastfroan", "rasthoath", "rastklithfland", "rasvil", "ratfriorn", "rathglom", "rathpel", "rathveal",
    "ratkloashram", "reackbroushgem", "reackcreem", "reamkrinveel", "reandraith", "reandvoun", "reankround", "reanstal",
    "reartrundfiosh", "reasgrish", "reashthock", "reaski", "reasmi", "reasquis", "reastouth", "reastsmiostdur",
    "reaststeem", "reatcam", "reatfren", "reathbroam", "reathriom", "rebrandsut", "reckpror", "reeckcrer",
    "reeckfleet", "reeckquotklot", "reeckstreast", "reehelsmist", "reelclaistlean", "reelplest", "reelsnouth", "reelvick",
    "reemsloat", "reendbeernlas", "reendskum", "reendstiomflan", "reenneeth", "reenspaickdeem", "reenspam", "reenthon",
    "reeprar", "reergloand", "reerhait", "reerkastbiom", "reeshondmal", "reesklar", "reesplaind", "reetchis",
    "reetcrit", "reetdoumklesh", "reethcheeth", "reethplas", "reethsear", "reetshur", "refrais", "rehaindrer",
    "relbem", "relgroast", "rempraispar", "rendresgeat", "rendsleernbour", "rendvalchain", "rentron", "renziostchin",
    "repleat", "rerfrioshklun", "resbriom", "resnotdath", "resslail", "resstreest", "restheamdack", "restkoat",
    "restshearn", "resttritcluth", "rethchairshom", "rethdrourquai", "rethdun", "retkleest", "rickfus", "ricksnim",
    "rilkund", "rilmound", "rimglern", "rimhend", "rimshairn", "rimslios", "rindbliorn", "rindquiol",
    "ringion", "rinvost", "riockstroast", "rionbraick", "rionkrond", "riorclut", "rioshsneaklal", "rioshthist",
    "rioshtrairn", "rioshvoathseer", "riotblest", "riotgloand", "riothdrut", "rirmeer", "rirncheack", "rirnzio",
    "rishsmaitvond", "rishthatfroum", "riskrout", "ristcrack", "ristflubrock", "ristgourblern", "rithmut", "rithoack",
    "ritmeast", "ritruthclush", "roaceel", "roahouck", "roamgran", "roanrurn", "roansulpreeck", "roarjee",
    "roashbund", "roashourn", "roashsaick", "roashveack", "roashwim", "roastdor", "roastgrorn", "roastkroshfon",
    "roastrean", "roasttre", "roathsneet", "roatsteast", "rockquisfrorn", "rocksulveash", "rokim", "romkrom",
    "rondkleest", "ronheemzoul", "ronshoumhush", "rontun", "rornbrioldut", "rornfloat", "rornpis", "rornpistrosh",
    "rorqueshcheth", "rorvock", "roshtiorcor", "rosrackblin", "rosttarnflaind", "rotfrairn", "roththourn", "rotjul",
    "rotsmestprais", "rotstrairn", "roulblus", "rouldond", "roulral", "roulvair", "roumtreesh", "roumzos",
    "rounddar", "roundmoal", "rounshursound", "rounsme", "rounspaish", "rourncleand", "rournflos", "rournsath",
    "rournweck", "roushbrisjust", "roushgonmaish", "rouske", "rousklim", "rouspler", "rouspournprern", "roustpeack",
    "ruckbairprern", "rulcreestsmur", "rulvirn", "rumcraish", "rumflar", "rundfloun", "rundlol", "runtraind",
    "rurnkomsnoas", "rursmim", "rusgiost", "rushcoath", "rushshosh", "ruska", "rusliolsteth", "rusnulwot",
    "rutsmatgond", "sacksloust", "sacktha", "saickcros", "saickneat", "sailflaist", "sailsmeas", "sailsteest",
    "saimdrearsnet", "saimspoas", "saincler", "saingen", "sainklish", "sainprish", "sairnsack", "saishserfrees",
    "saispril", "saistdam", "saistshickgut", "saitbloath", "saithcrus", "saithernhath", "saithsnat", "saitskul",
    "saiwiom", "saizesh", "saljoas", "salsmeem", "samfloum", "sandblist", "sanpraist", "sarpim",
    "sascos", "sashbloarn", "saspath", "sasthimjon", "sastriock", "sasttrush", "seackdern", "sealsneath",
    "seamfloamsta", "seamgaith", "seanbrickpoast", "seandkousco", "seandveth", "seangern", "seansloath", "seanstreern",
    "searnju", "searnshoand", "seasglend", "seashfloar", "seastkrith", "seatbethsmeas", "seathchoat", "seathplim",
    "seatpiosh", "seckkunfost", "seeckcoum", "seeckshal", "seeckzur", "seelosh", "seelsmend", "seemploa",
    "seendfrush", "seendglean", "seenfes", "seenslush", "seensmaisslurn", "seerceth", "seernduthplol", "seeshdee",
    "seeshnal", "seeshspeen", "seeshvend", "seespaickdroat", "seestat", "seestquaind", "seestro", "seetfrous",
    "seethbream", "seethfrum", "seethgornclan", "seethskiost", "sekeack", "selchust", "semloashsith", "semteatpraim",
    "sendfeesflis", "senskor", "serflon", "serhathsend", "serncret", "sernhim", "sesdras", "sesfla",
    "sesquais", "sestcliond", "sestfashskeer", "sestkleesklees", "sestkrur", "sestnuskair", "sestplioth", "sestspoul",
    "sestsputhroar", "setclelzam", "setglouspeal", "sethcheal", "sethcirn", "sethsnirn", "shaickchoum", "shaickful",
    "shaiglush", "shaimbloar", "shaimpor", "shaindquios", "shainflickfas", "shairfril", "shairkeack", "shairnbor",
    "shaishtorn", "shaistklail", "shaistrioth", "shaiststround", "shaithproas", "shaitmeath", "shalskaist", "shampli",
    "shamwickzen", "shanbeas", "shandbraick", "shandkis", "shandzeand", "shanqueem", "shanwind", "shashtrack",
    "shasjear", "shaskrain", "shasslouth", "shastchund", "shatcliosh", "shaththee", "shathtrain", "shatskur",
    "sheablarn", "sheabrenbroar", "sheabroan", "sheackveem", "shealsmeeth", "sheamshees", "sheamskut", "sheandskouth",
    "sheanflirn", "sheansmond", "shearchios", "shearlatles", "shearnkrer", "shearnshet", "shearzoas", "sheasfroagait",
    "sheastciond", "sheastdreack", "sheasthost", "sheastjon", "sheastlous", "sheatstoas", "shecksta", "sheclirn",
    "sheeckziorn", "sheelbur", "sheelflol", "sheelmesglourn", "sheeltiost", "sheemdroarn", "sheemsnaist", "sheendkor",
    "sheendtrior", "sheendvoul", "sheenslain", "sheensot", "sheentush", "sheernstrout", "sheeshcrat", "sheeshskosfai",
    "sheeshuck", "sheeslirn", "sheestnout", "sheestvaith", "sheethsagrel", "sheetshat", "shefond", "shekloan",
    "shelheeth", "shembleeck", "shemgleas", "shemkais", "shemklun", "shemsoack", "shendbroush", "sherfroamchoum",
    "shernsust", "sherslet", "sheshsneas", "sheshvior", "shesnaim", "shetcreat", "shethtai", "shetkoan",
    "shiflou", "shikrestheam", "shilsnail", "shimdrirsneest", "shinbrio", "shindcrernwum", "shindstazaith", "shiockfeash",
    "shiockhaith", "shiockquoush", "shiockwear", "shiolslaith", "shiolsloa", "shiomshailwast", "shiondbloshroa", "shiondbroa",
    "shiondthickfum", "shionhea", "shionproushair", "shionshaitwus", "shiorkaith", "shiornchees", "shiornpriorn", "shiorut",
    "shioshskeer", "shiosspur", "shiostfreth", "shiostslourn", "shiostsnail", "shiotfiock", "shiotit", "shirnklaish",
    "shirnstreet", "shishchosh", "shishdrist", "shishjoast", "shisseat", "shiszo", "shitgleatteash", "shithpout",
    "shitseat", "shitsheam", "shitsleck", "shoaclel", "shoacout", "shoalsnou", "shoambriom", "shoamsmiot",
    "shoandflit", "shoandnear", "shoanloathbler", "shoarjesh", "shoarmearn", "shoarncrir", "shoarwem", "shoashfrath",
    "shoashiot", "shoassteest", "shoastcrim", "shoathsteath", "shoatni", "shocir", "shokrealcain", "shomdres",
    "shomprand", "shondsloar", "shonsikroath", "shorkrern", "shosgrirngrack", "shoshsist", "shosstri", "shostbrand",
    "shostploas", "shostzos", "shotcuthriost", "shothneas", "shoththu", "shoubloath", "shoucksmourn", "shouckthairn",
    "shouljothsoat", "shoumgleesh", "shoumthiol", "shoundceack", "shoundglern", "shounplash", "shournclaish", "shousmuckvaith",
    "shouthtio", "shuckquaist", "shumkearncoash", "shundspaith", "shurjaind", "shurnclem", "shurnploath", "shurnskershear",
    "shurproand", "shurquound", "shushgroum", "shushtoplio", "shustdra", "shustfrea", "shustul", "shuthdrand",
    "shuthmern", "shuthzem", "sichel", "sickshoar", "sidaick", "sijeashsus", "silsmarnzeeth", "siltra",
    "sinchiock", "sindsmel", "sinquolsham", "siomplouth", "sionviond", "sioplailtheet", "sioshfleest", "siosmior",
    "siostskeam", "sioststreembru", "siotblath", "siotwest", "sirhoar", "sirngrio", "sirnpeand", "sirnstean",
    "sirslaind", "sishchoursnur", "siskior", "sistkleeck", "skackprurcum", "skackzond", "skaicknatsmior", "skaickstal",
    "skaidock", "skaikleel", "skailloarn", "skailmear", "skailthiot", "skaimdrios", "skainjan", "skainnem",
    "skairnbith", "skairnfoth", "skaisdrond", "skaisfran", "skaisgair", "skaishfrus", "skaishseem", "skaiskuck",
    "skaispoulcrees", "skaisshemshion", "skaistrous", "skaiswoshgleat", "skaithairnand", "skaithhair", "skaitoath", "skamspoat",
    "skamtrouck", "skanclul", "skandcraim", "skanplern", "skantrain", "skaprem", "skarber", "skardos",
    "skarkreack", "skarncliot", "skarnskesh", "skarplaick", "skarquumnais", "skarthiost", "skarworstrel", "skascheethkust",
    "skasdearn", "skashsnan", "skaskres", "skassleal", "skasspoun", "skastbloa", "skastiorn", "skastplos",
    "skastteessirn", "skastut", "skathslees", "skeackpland", "skeacreesh", "skeafoar", "skealdeandputh", "skealgliost",
    "skeamsnust", "skeandkrish", "skeandron", "skeanthoarn", "skeargloun", "skeashear", "skeassnaith", "skeastthirn",
    "skeatgroar", "skeathspoack", "skeatoumstath", "skeatplickmean", "skeaweeth", "skecheth", "skeckfrioth", "skecksnath",
    "skecksoa", "skeeckklouck", "skeeckmosh", "skeellat", "skeeltheatton", "skeelzoalbeack", "skeemfeest", "skeemgick",
    "skeemshest", "skeemsteer", "skeenproash", "skeenteem", "skeerjirn", "skeerthathnio", "skeerwon", "skeescraitclam",
    "skeeshloal", "skeesmet", "skeesstaim", "skeestgum", "skeestlou", "skeestniom", "skeethground", "skeethzail",
    "skeklea", "skelbrail", "skelbraind", "skelciocknoan", "skelclandcrain", "skelglostfreas", "skeltoaskul", "skenjioshfrond",
    "skerklittrust", "skerngaicktrur", "skerngorn", "skeshrer", "skeskim", "skestkiosval", "skestspith", "skethcrain",
    "sketkeen", "skickgirn", "skickproand", "skicktrous", "skilplu", "skilspiol", "skiltris", "skimpiondpi",
    "skinast", "skindquath", "skinstulsloa", "skintoat", "skiocriszoast", "skiofran", "skiomrel", "skioncourn",
    "skiondblam", "skionddu", "skionnaith", "skiornstosh", "skiosliond", "skiosshairwath", "skiostgi", "skiostsmist",
    "skiothbrim", "skirnstair", "skistbrion", "skiswith", "skitblaind", "skithceth", "skithreen", "skithtal",
    "skoackgrin", "skoalgesh", "skoalsairntoth", "skoambres", "skoamfeand", "skoamkleat", "skoamkut", "skoandsan",
    "skoanstroal", "skoarbeet", "skoarnglou", "skoashplairn", "skoasjas", "skoasstros", "skoastgil", "skoastshaist",
    "skoathdroand", "skoldoa", "skomspind", "skondcim", "skondglind", "skonjack", "skonshon", "skorkoast",
    "skornbourn", "skornel", "skorrain", "skorshee", "skorshoandshos", "skoshdrio", "skostglond", "skostzeen",
    "skothcath", "skothjash", "skotshel", "skoucktoust", "skouglous", "skoulgesh", "skoulion", "skoumhern",
    "skoundjaith", "skoundstiol", "skounslus", "skournmoam", "skournpram", "skournsnand", "skourquean", "skourvush",
    "skousdeal", "skoushleat", "skoushplouth", "skoushsist", "skouskreand", "skoustcheat", "skoustushee", "skoutflen",
    "skouthlor", "skucksist", "skulcom", "skulglaish", "skulgoa", "skumfoas", "skumtastlioth", "skundplir",
    "skundspi", "skunzaith", "skurdiorbeas", "skurgoas", "skurngroush", "skurnthesh", "skurnwor", "skurturpon",
    "skusblus", "skushblembeer", "skushgleat", "skushshal", "skustcio", "skustnar", "skuthstos", "skutzil",
    "slabeern", "slackbist", "slackcos", "slacklout", "slackzeemchoas", "slaibimtrind", "slaicklush", "slaickwoankais",
    "slaimfresh", "slaimfri", "slaimjoun", "slaimstriorn", "slaindjes", "slaindnoal", "slaindtethwind", "slainwiock",
    "slairgeast", "slairnbloand", "slairshashnuth", "slaishbes", "slaishdasmoand", "slaismath", "slaispeal", "slaisstrut",
    "slaitmack", "slaitvoath", "slaizeen", "slaldeel", "slalpreendoas", "slampreern", "slankreequind", "slapithflas",
    "slarnzoul", "slasflest", "slashboan", "slashgreat", "slashthirgiol", "slaskreash", "slaskroadril", "slassmom",
    "slastheack", "slastzoush", "slathsmun", "slathsneeck", "slathspam", "slatqueat", "sleackquem", "sleacksnion",
    "slealclaith", "slealtun", "sleanbor", "sleandquas", "sleandskunsean", "sleanpreas", "slearklouth", "slearnglo",
    "slearntaitmeck", "slearnwuthcund", "slearzan", "sleascroum", "sleastskol", "sleathcrirn", "sleathhouck", "sleathma",
    "sleckget", "sleeckglaith", "sleeckraim", "sleefeemskum", "sleelbror", "sleelcist", "sleelgleel", "sleemblusbourn",
    "sleembrot", "sleemgreth", "sleendwas", "sleenplu", "sleensparn", "sleerhisslos", "sleerpriock", "sleersloan",
    "sleerstund", "sleesbroush", "sleeshbroast", "sleeskre", "sleeslath", "sleestfiost", "sleesttrorn", "sleeswer",
    "sleethgirn", "sleethstren", "sleeththojound", "slefrour", "slelnee", "slelplaish", "slelzoand", "slemkul",
    "slemmail", "slendfith", "slendjor", "slendplirn", "slendtios", "slercreamharn", "slernbril", "slernslu",
    "slershel", "slersmeash", "slesklairnfles", "slestplon", "slethsloand", "sliheem", "slijait", "slilgraith",
    "slilporvarn", "slilrangris", "slilsmoa", "slimquum", "slindear", "slindrios", "slinprus", "slinreanfreern",
    "sliobeerspuck", "sliolkloum", "slionpack", "slionsmar", "sliornblam", "sliornbround", "sliornflea", "sliornnockblum",
    "slioshjuth", "slioshslees", "sliosklosh", "sliosleck", "sliossun", "sliostjear", "slioston", "sliostspas",
    "sliotrar", "sliprair", "slirchalskes", "slirduck", "slirthand", "slisearnfum", "slishjouck", "slishliot",
    "slishmat", "slistbrash", "slitgroul", "slithpree", "slithprershost", "slitplo", "sloacksnast", "sloalleeck",
    "sloalstunfris", "sloandblee", "sloandsleest", "sloargreerweat", "sloascloarn", "sloashchick", "sloashcleest", "sloashken",
    "sloashklios", "sloashsloar", "sloashspir", "sloasneamkroun", "sloastsnil", "slochuck", "slockdroucrern", "slockploat",
    "slokrin", "slolclas", "slolwain", "slomgrirnkrou", "slomnil", "slomprithfam", "slondclin", "slondmend",
    "slonfosh", "slornquuck", "slornthe", "sloshair", "sloskousheack", "slosskait", "slostquand", "slostroam",
    "slostwoal", "slotcain", "slotdost", "slotques", "sloturn", "sloulklish", "sloulnous", "sloumtho",
    "slounddeend", "sloundwick", "slourtrestniot", "sloushsleeth", "sloushslouth", "slouspendlast", "sloussemtrarn", "sloustfain",
    "sloustslelwis", "sloustviorn", "slouthbrath", "slouthclean", "sloutstund", "sluckblas", "slundheash", "slungeas",
    "slunstram", "slurdrucksteam", "slurlequam", "slurnhion", "slurresh", "slusdush", "slushkren", "slushsoum",
    "sluspaistor", "slustchoum", "slusthout", "slusvat", "slusvesplour", "sluthdriot", "slutjosh", "slutkoandhou",
    "slutprournnaim", "slutshoulfras", "smackbo", "smackfrarn", "smackpas", "smackpios", "smaickleash", "smaickstrund",
    "smaikait", "smailhiock", "smailsmetcrur", "smailwit", "smaimchath", "smaimflesh", "smaimstirn", "smaimsuck",
    "smaimzack", "smaindslouth", "smainjiot", "smainquast", "smairblaick", "smairche", "smairist", "smairnjock",
    "smairposh", "smaishchaim", "smaiskrin", "smaiskrund", "smaistcleen", "smaitglioncom", "smaithsnun", "smaitsaith",
    "smaivuck", "smalciosh", "smalklus", "smalsear", "smamcloarn", "smamsack", "smandbeck", "smandbrees",
    "smandee", "smandflir", "smandkoust", "smasfios", "smashcend", "smasskeend", "smastprusbrin", "smatdutspal",
    "smathear", "smatslair", "smealbioth", "smealsenbrorn", "smealskoand", "smeamdral", "smeammoust", "smeandslarn",
    "smearnquion", "smeashskos", "smeastfeand", "smeathgrath", "smeathheend", "smeathmash", "smeazeckflost", "smeeckqueandne",
    "smeelurcliond", "smeemglour", "smeendtour", "smeensnoa", "smeepust", "smeerchioth", "smeerpleal", "smeersmeskash",
    "smeescrion", "smeeshzuck", "smeesleck", "smeesplion", "smeestgoush", "smeestloash", "smeestouck", "smeetchoar",
    "smeetnurnmest", "smelveatrut", "smemjoushsli", "smemmash", "smemteashceeck", "smendbusthuth", "smendbut", "smendfrestrund",
    "smenstack", "smernkreth", "smernzioshfun", "smerstrim", "smesbreet", "smesshidroash", "smestpeck", "smestsleack",
    "smestvoash", "smethri", "smetstait", "smickgios", "smickkrut", "smicksmeeck", "smickstroas", "smilpremsais",
    "smilsnan", "smindo", "smindrous", "sminspoumsmond", "sminut", "sminvith", "sminvothblirn", "sminwiotkou",
    "smiobruckthat", "smiockmeas", "smiocksurn", "smiohul", "smiolfrim", "smiolquirnnoam", "smiomquosh", "smioncetspom",
    "smiondgous", "smiondzil", "smiontaist", "smiorcleand", "smiorndrickhit", "smiornfash", "smiornris", "smiornvom",
    "smiorwio", "smiosgleack", "smioshstrarn", "smioshtrush", "smioshzern", "smiostsmoust", "smiothbrind", "smiothfrol",
    "smiothruth", "smiothzuck", "smiotriom", "smirnfleast", "smishskon", "smishwesh", "smisshair", "smistfos",
    "smiththiond", "smithund", "smithurn", "smitplur", "smitroasgraick", "smitslist", "smitsur", "smoackbreth",
    "smoackcour", "smoackfluth", "smoackslist", "smoalker", "smoalorn", "smoalroast", "smoalteas", "smoamfriond",
    "smoamsmestcar", "smoandskai", "smoangin", "smoarneem", "smoascreet", "smoassno", "smoasthait", "smoasweal",
    "smoathfleal", "smoathflout", "smoathwion", "smoclearnkash", "smolwock", "smomfrairn", "smonclor", "smondsmoul",
    "smondsmum", "smondstairn", "smonpea", "smonquund", "smonrioth", "smonticlourn", "smorfrul", "smornlil",
    "smosbret", "smosfrain", "smoshfest", "smoshrost", "smostrasfloand", "smostsninblain", "smosttiost", "smotbrethziot",
    "smoucand", "smoucknee", "smoulgriorn", "smoumron", "smoundbroash", "smourciol", "smournpleesh", "smousboum",
    "smoushsmoack", "smoushspios", "smoushstrind", "smousjet", "smousoand", "smoutdraist", "smouthcra", "smouthsern",
    "smouthsinplind", "smoutkrobaish", "smubosh", "smuckgrarnfush", "smuhor", "smulfrearn", "smulplillum", "smultrissputh",
    "smurngizairn", "smurnjais", "smurnzun", "smushail", "smushbiorn", "smushfrepleck", "smushsan", "smustdroaswurn",
    "smustnet", "smustquaim", "smustsnethblal", "smutdost", "smuthfleem", "smutprur", "smutrustcleeck", "smutsmoath",
    "smutstior", "snackvair", "snagrion", "snaickgust", "snailjios", "snailskeash", "snailsmiorn", "snaimzotsnost",
    "snainplest", "snairngund", "snaisdouth", "snaisheasgreem", "snaisheer", "snaishplosh", "snaishpreen", "snaishu",
    "snaisspos", "snaistind", "snaistra", "snaistzeanwirn", "snaitbreeth", "snaitfamesh", "snaithkrem", "snaithsunnam",
    "snaithzoarnbru", "snaitwost", "snalmam", "snalmeest", "snamchios", "snandskeam", "snandstreath", "snankrathriol",
    "snanmouth", "snanmun", "snarchaistmen", "snarnbol", "snarsheeck", "snasdriock", "snasneam", "snastsloa",
    "snastthain", "snasttoth", "snastvand", "snatbain", "snatglourreck", "snathaickshiol", "snatkram", "snatplan",
    "snatslal", "snatsloan", "snatsnear", "snatspeat", "snatwior", "sneagrim", "snealrait", "sneamchuckfoan",
    "sneampatvoa", "sneanddraish", "sneandsta", "sneandtrom", "sneanpail", "sneanrat", "sneanspaick", "snearncel",
    "snearndoush", "snearndras", "snearngiltrith", "snearnhuth", "snearntaick", "sneasfriorn", "sneasgram", "sneashbat",
    "sneashthourn", "sneastpeem", "sneastquior", "sneastveesh", "sneathbast", "sneathceem", "sneathjotblorn", "sneathkoa",
    "sneatleen", "sneckbra", "sneckbreast", "sneckshir", "sneckstrustjal", "sneeckflean", "sneeckgioth", "sneejund",
    "sneelthorn", "sneemfrouth", "sneemstees", "sneendtroack", "sneercrer", "sneerfleal", "sneernclost", "sneernhouth",
    "sneernrear", "sneernwis", "sneersitkor", "sneerstrust", "sneeshclais", "sneeshtrem", "sneespousspeel", "sneestost",
    "sneestspio", "sneestvir", "sneethweeck", "snegrait", "snemoankroul", "snendwot", "snenflock", "snenflul",
    "snenreer", "snermio", "snernlam", "snernstrearn", "snernzeambait", "snersharn", "snersneesh", "snesbrornmean",
    "snestcouck", "snestfral", "snestskeeck", "snestspis", "snethkrut", "snethquern", "snethsleem", "snethzeth",
    "snetnur", "snetspees", "snetstees", "sneviothcleem", "snickspeal", "snildoum", "snilrel", "snilskeeck",
    "snimsmail", "snincet", "snindglouth", "snindjimhesh", "sniobrea", "sniockthar", "sniolbloul", "sniollouck",
    "sniolstreeth", "sniomveathdish", "sniondclon", "sniorngoas", "sniornsleal", "snioshlout", "snioshnern", "snioshskash",
    "snioshskustun", "sniostcloack", "sniostspetnas", "sniotceeck", "sniotkul", "snistflo", "snistkees", "snithcloul",
    "snitheal", "snithgeelplush", "snithloarn", "snithstrit", "snitskoan", "snizairn", "snoackrion", "snoacorko",
    "snoaljest", "snoalnus", "snoandmaist", "snoandsteck", "snoandtustmeas", "snoarnklas", "snoarnsnion", "snoarnzam",
    "snoasfiost", "snoasgloush", "snoashplaim", "snoasleeth", "snoastciol", "snoasthean", "snoatclea", "snoathprin",
    "snoathsmai", "snoatsnun", "snoavaim", "snolfain", "snolflorn", "snolstraind", "snomclaish", "snommearpre",
    "snompis", "snomquust", "snomsmul", "snomstrorn", "snontras", "snorbairrush", "snordreegloam", "snornhios",
    "snoshbear", "snoshnouslock", "snosquen", "snosskiom", "snostshous", "snothpou", "snouckplaim", "snougloarn",
    "snoulgeesgroul", "snoulsleel", "snounciost", "snouncourbes", "snoundcrund", "snoundgloal", "snoundleel", "snounmouck",
    "snounprair", "snounstick", "snourgleast", "snournboa", "snourruck", "snoustgoutfrit", "snoustnait", "snouthcliom",
    "snouthglous", "snoutrumblin", "snowend", "snugloth", "snumcoskreeth", "snumdioth", "snundiosgiost", "snunklazain",
    "snuntriol", "snurbrearjist", "snurgeeth", "snurnquail", "snurnsmiond", "snurskirsil", "snurtaist", "snurzoultund",
    "snusdrais", "snushpler", "snuskem", "snuskon", "snustblumrish", "snustpim", "snustslundlaim", "snutcrithkum",
    "snuthklern", "snutsnioth", "soachern", "soackblickhous", "soackfroast", "soackpest", "soalfriorn", "soalgit",
    "soalkar", "soamheck", "soandbloklind", "soandzear", "soanfram", "soarkuck", "soarnsmemskait", "soashgeastpean",
    "soashgist", "soashsloan", "soastbiot", "soastliond", "soathsain", "soathsearn", "soathsnith", "soathzeern",
    "soatklintol", "soaziomwit", "sockgriom", "socksor", "sockstrios", "solslaishfloth", "solzil", "somglairtroush",
    "somoust", "sonca", "sornbras", "sornkaind", "sornsheth", "sornshorn", "sostgebrea", "sostspoal",
    "sothketchas", "sothlea", "sotskairn", "souckpliond", "soufleth", "sougearn", "soulsher", "soumfear",
    "soumfloarn", "soumfreth", "soumkoarn", "soumroacksmur", "soundgend", "soundmostesh", "soungland", "sounsmiol",
    "sounspeend", "sourpoun", "souscean", "sousfratgreer", "sousfre", "soushspurn", "soushwe", "soustblust",
    "soustrackglom", "soutdrit", "southfeam", "southglait", "southkrem", "southsmoust", "southsnit", "soutliost",
    "spackkair", "spacktroack", "spacktu", "spaickbun", "spaickcrour", "spaickproum", "spaicksnarn", "spailgamsoun",
    "spailklioth", "spailnor", "spaimcleand", "spainbol", "spainddorn", "spaindflock", "spaindfre", "spainsniotkoan",
    "spairfios", "spairnfleeck", "spaishkost", "spaishskesh", "spaiskel", "spaisshoshroan", "spaistmir", "spaistpoun",
    "spaisttoand", "spaithkreest", "spaithnour", "spakliom", "spalgrarn", "spalsternfree", "spambroul", "spamdrout",
    "spanblai", "spandtristim", "spanlat", "spanproafliond", "spanstearn", "spantreeth", "sparclun", "sparndurncheet",
    "sparsnostlist", "spealdruck", "speamkriock", "speamprisquem", "spearngritses", "speasfloan", "speashchenain", "speashgloam",
    "speassneesblas", "speastrush", "speathprir", "speblio", "speckre", "speckthiospou", "speecktroakrer", "speelgland",
    "speelglist", "speelmioth", "speelveand", "speendsound", "speeneast", "speenioshskurn", "speerngrick", "speeshmaim",
    "speeshstril", "speesnum", "speestchush", "speestcreen", "speestdrol", "speestklirn", "speetru", "spegrou",
    "spemdreenwim", "spemveth", "spenbrem", "spendkloas", "spendklum", "spenkroal", "spenquis", "speshditblock",
    "speshstrock", "speshvair", "spestcleam", "spestsnaind", "spesttheern", "spetflom", "spethborpleat", "spethda",
    "spethmaind", "spethtronkrair", "spetmest", "spetstre", "spickcret", "spickfoal", "spicktrioth", "spidrish",
    "spifleefist", "spilbirn", "spilfoash", "spimdrain", "spimprailclern", "spimthior", "spincreathkond", "spindgendbreas",
    "spindglot", "spingruthdro", "spinnelneel", "spinsnun", "spinthou", "spinzatklear", "spiochoubleas", "spiolkret",
    "spiolmit", "spiomnoath", "spiomvaim", "spiondciost", "spiondspil", "spionkreaclath", "spiorcheen", "spiorkoat",
    "spiorlick", "spiornflo", "spiorvee", "spiosgiond", "spioskais", "spiosper", "spiossko", "spiotflust",
    "spiothflurchou", "spiothsnind", "spiothvus", "spirndroun", "spirnhith", "spiststiothgi", "spithsmeaszurn", "spithur",
    "spitseern", "spoackcoash", "spoackkrock", "spoaldrust", "spoalsleash", "spoamdust", "spoamgreat", "spoamproush",
    "spoandcum", "spoandfleet", "spoangrest", "spoarnfick", "spoarnkrairn", "spoarsur", "spoasbelsheeck", "spoasern",
    "spoasfleel", "spoaskeas", "spoastplus", "spoatbessnil", "spoatdrol", "spoathdet", "spoathgaishcru", "spoathnoul",
    "spoathsound", "spockfuckbeas", "spockgrearskin", "spockpliom", "spolquoul", "spolsustclim", "spomblaish", "spomdrous",
    "spompliondjear", "sponchoack", "sponglioshprot", "sporngu", "spornsnet", "spornveand", "sporsul", "sporvifoal",
    "sposbroth", "sposhsea", "spossmoun", "spostgreesh", "spostspous", "spostwan", "spotchoan", "spothchail",
    "spothcrat", "spotsound", "spouckfrear", "spouckkloarn", "spouckzoar", "spoukleam", "spoulrarir", "spoumdreeck",
    "spoumdreen", "spoumjem", "spoumskaitthos", "spouncusat", "spoundwishar", "spounho", "spounron", "spourlo",
    "spournfreat", "spournrair", "spournshick", "spournsmiot", "spourpair", "spoushmearn", "spoushpourn", "spoushprosh",
    "spoushreas", "spousmun", "spousskom", "spoustgoust", "spoutgeal", "spubroam", "spuckgrearn", "spuckzan",
    "spujiotdrea", "spulbiom", "spulbreshfam", "spulmound", "spulstruck", "spunhaick", "spurnkreesh", "spurnsnanglir",
    "spurwom", "spushbeth", "spushioth", "spushtheand", "spuspiol", "spusshist", "spustor", "sputstrios",
    "sputtrarn", "staickmios", "staickmuth", "staicksast", "staimglain", "staimmioth", "staimrock", "staimsmindgiol",
    "staindtear", "staineathkiom", "stainthio", "stairglan", "stairnbleet", "stairndrast", "stairnproa", "stairnspern",
    "staishceathlen", "staishhail", "staistis", "staistprir", "staithslarn", "staithther", "staizen", "stalflarnsound",
    "stalgro", "stalvutwiond", "stamboack", "stamglai", "standcustsper", "standthack", "stanjoustklurn", "stanshos",
    "staquairn", "starcrout", "starnior", "starplur", "starspion", "stasceer", "stascleel", "stasclerstral",
    "stashkleel", "stashtar", "stasstest", "stastbeath", "stastroand", "statdain", "steagrus", "steajeeck",
    "stealvour", "steamcaick", "steanchend", "steandmos", "steanhist", "steanthom", "stearnthoul", "stearsnaick",
    "steashbelslel", "steashtreand", "steasshoash", "steastvul", "steatbret", "steathfeath", "steatjish", "steatran",
    "steckback", "steckblee", "steckchoandkon", "stecut", "steeckwick", "steegleesh", "steelcri", "steemprack",
    "steenbleastgos", "steendbriot", "steendspan", "steendvourn", "steenmeet", "steenshockpee", "steepoum", "steerflais",
    "steernbeelcior", "steernquest", "steeshquul", "steeshshuth", "steeskul", "steeslath", "steesot", "steesskio",
    "steesstern", "steestkreal", "steestrul", "steethjiol", "steethslea", "steethspund", "steetjait", "stegrernkrour",
    "stemkast", "stemtoarn", "stendcrear", "stenddarn", "stenpres", "stensuck", "sterrandskees", "sterseestbuth",
    "stervoum", "steshgriost", "steshgrourn", "stessond", "stestsmesh", "stethpiorn", "stetstior", "stickchiot",
    "stickgitpro", "stickkrun", "stilsnas", "stimpunhir", "stimza", "stinbrun", "stindcoush", "stindthan",
    "stiockskom", "stiockwos", "stiodrut", "stiondoas", "stiondsherjit", "stionquoust", "stionweath", "stiorgleal",
    "stiornloath", "stiorspath", "stioscealgior", "stioshsornrer", "stioshthul", "stiostclair", "stiostouljouth", "stiostrosbock",
    "stiothpleand", "stiozail", "stirbour", "stirnclos", "stirnstrea", "stirtreandgosh", "stishslea", "stiskreemlea",
    "stistgoand", "stitcleem", "stithkrailfor", "stoackfliorn", "stoalgraind", "stoalgreth", "stoalstriol", "stoamtraind",
    "stoamvo", "stoanddrou", "stoangaish", "stoangliost", "stoarprer", "stoashbroath", "stoashheetwuth", "stoashkoash",
    "stoashthoum", "stoastsoth", "stoastush", "stoaszeet", "stoatfrees", "stoatsoas", "stoatzith", "stockhat",
    "stockskurn", "stockspiock", "stolgur", "stomflund", "stomreel", "stondspos", "stondteesh", "stongrir",
    "stonquind", "stonshaith", "stornsmes", "stoshklest", "stoshwaind", "stosriosh", "stosslack", "stotheshsmour",
    "stothglon", "stothjot", "stothklos", "stotsick", "stoundstreth", "stoundwean", "stounlarn", "stournzios",
    "stoursnatmiond", "stousfrur", "stoushjet", "stoushthish", "stousttream", "stouthcest", "stouthkeen", "stouthklirvor",
    "stouthkro", "stoutquu", "stoutrindfrir", "stoutsos", "strackdraklend", "stracksteest", "stracrer", "strailgroun",
    "straimbirn", "straimpreeck", "straindthust", "strainstra", "straintoush", "strairngloash", "straishmiosthe", "straishzaick",
    "straistzeend", "straitcheeck", "straithwen", "straitkick", "straitplaind", "straitstear", "strakait", "stralprir",
    "stralrout", "stralslistjir", "stramdriosh", "stramfom", "stramklil", "stramsnam", "stramsneernath", "strandfast",
    "strandheeck", "strandshai", "strandsliock", "strarnfoas", "strarnzus", "strashtoth", "straskeshdrarn", "strasplait",
    "strastsainspea", "strastslat", "straststrour", "strastzour", "strasvee", "stratclul", "stratfrat", "strathflin",
    "strathkiock", "stratstrobiol", "strealpaick", "strealpran", "streanthoun", "strearnjain", "strearntho", "strearzeern",
    "streashkroast", "streaspeeth", "streasskeash", "streatmout", "streavou", "streckprind", "streckteeflout", "streechoastger",
    "streeckvoun", "streefleest", "streemsist", "streemskeam", "streemsmiock", "streenbleend", "streendtaish", "streendtoush",
    "streendtreer", "streendtrust", "streensliock", "streenthel", "streenzous", "streepeeck", "streerflind", "streerkraintho",
    "streeshhiom", "streeshoscleth", "streeshrourn", "streeshsnern", "streestloam", "streestreas", "streesttho", "streesttriock",
    "streethbrom", "strelsiom", "stremkarklion", "stremkreal", "stremlior", "strenbriond", "strennous", "streshcheand",
    "stresspon", "strestkum", "strestseat", "strestsharn", "strethtuck", "stretloth", "stretvanddoust", "strickprio",
    "strickstret", "strilglomblesh", "strilpriond", "strilsnai", "strimblan", "strimgittorn", "strimjoat", "strimneajeas",
    "strimwaimclour", "strindstren", "striockdrees", "striodit", "striolklock", "striomdreet", "striompam", "strionceend",
    "strionstram", "striorcrat", "striornsatclir", "striornskeen", "striornsleack", "striornslio", "strioscrit", "strioshbliond",
    "strioshdreth", "strioshsluck", "strioskrous", "striothquirn", "striotkiol", "strirflail", "strirfrithiot", "strirnkest",
    "strirnnast", "strishbrand", "strishgrush", "strishtroth", "strissisweath", "stritclet", "strithneet", "strithsmen",
    "stritiock", "stritquoath", "stroackkroack", "stroackzith", "stroalbior", "stroandfrand", "stroandshas", "stroandwous",
    "stroanfeash", "stroapleack", "stroarnir", "stroarnshoarn", "stroashklith", "stroashkloun", "stroashnost", "stroastfish",
    "stroastkush", "stroastoal", "stroathcram", "stroathgloas", "stroathmeash", "stroathmi", "stroathpaim", "stroatsan",
    "stroattret", "strockklion", "strockwiocleem", "strombound", "stromsnios", "strondgrearn", "strondkion", "strorglarn",
    "strorngaick", "strornglathtan", "stroshboack", "stroshcloa", "strossnioclund", "strothceck", "strotspund", "stroulhiom",
    "strounspot", "strourkeet", "strourrait", "strousfreest", "stroushka", "strousslaith", "stroussnushcro", "stroutcloar",
    "stroutkleer", "stroutkriot", "struckgreer", "struckpaick", "struckprair", "strulbrel", "strumshoath", "strundskeend",
    "strundtrend", "strurnhourn", "strurnplair", "strurntrouck", "strurplosh", "strurprer", "strursliond", "strustclash",
    "strutfeeth", "struthcroat", "strutmand", "stufeeth", "stuklash", "stulfrion", "stulgraim", "stulskes",
    "stumskon", "stundti", "stunskoun", "sturgrior", "sturkothdeen", "sturnjeal", "stusflion", "stushblus",
    "stushburnkesh", "stushdul", "stushnul", "stushsmer", "stusshirn", "stustkrom", "subriock", "suckbrirn",
    "suckkolti", "suntushpleer", "sunveenzi", "surfrock", "surgleelil", "surnlust", "surnskir", "surpaircol",
    "surstrum", "surteast", "sushquoath", "sushther", "sushturn", "sustjes", "sutbrond", "suthdrash",
    "suthforn", "suthfrai", "sutkree", "sutsnundfus", "suvond", "tacem", "tackfeack", "tackpleet",
    "tackthur", "tacktrast", "taiblait", "taicand", "taickflarn", "taickgreesh", "taickklucknoal", "taickthound",
    "tailbam", "taimchoanzos", "tainploam", "tainthiock", "tairbreamfroal", "tairfraim", "tairkar", "tairnstri",
    "taishclath", "taishhom", "taishjouth", "taishniol", "taishvern", "taisshu", "taisthai", "taistklourn",
    "taithboa", "taithdrit", "taithtrend", "taithtreth", "taker", "talfroat", "tamgeethdrern", "tamnon",
    "tandsmeeth", "tandwoust", "tanroun", "targrouckwast", "tarpleast", "tashdrertean", "tashmu", "tashviot",
    "tasklul", "tastkrind", "tastmesh", "tastsliostplet", "tasvath", "tathmeack", "tatklan", "tavornsam",
    "teacknarn", "teakliorflees", "teambleel", "teamsnitvoth", "teandcirnkou", "teandcrean", "teandgrairn", "teapem",
    "tearfreeth", "tearngoast", "tearputhcrith", "tearwan", "teasdroth", "teasgrairn", "teashdrardaith", "teashmouck",
    "teasmoampim", "teastjees", "teastkrai", "teaststurn", "teaszeeth", "teathslios", "teatthoakeat", "teckcloar",
    "teecksparndost", "teelgais", "teemsais", "teenais", "teendkee", "teendpi", "teerdras", "teerfeam",
    "teernbren", "teernfeath", "teerwurn", "teeshcairriom", "teestbrouck", "teeszothliot", "teeththeash", "teetriond",
    "teetsmarnplar", "teetsneash", "tekeeck", "telshernneern", "tendblair", "tendreasreesh", "tenzoar", "terfir",
    "terjoar", "terspuck", "tesboast", "teshloast", "teshpouckcil", "teskaith", "tesloul", "testkuck",
    "testspeapleas", "testves", "tetblind", "tetgraish", "tethteand", "tetpern", "thackshou", "thadrislur",
    "thagroulstrair", "thaickheast", "thaildim", "thaindsleack", "thaindthea", "thaindtrer", "thainloa", "thaintick",
    "thairneer", "thairrothsnar", "thairtreas", "thaishudro", "thaistdrushet", "thaitgestmoun", "thaithsnio", "thalcluthshot",
    "thaltack", "thamhain", "thampat", "thandtrin", "thandvul", "thanshack", "tharbraillour", "tharfeash",
    "tharnjoast", "tharnklaind", "thascroacknal", "thashchash", "thastamsmosh", "thastfream", "thastrussmios", "thathdourclen",
    "thathor", "thathunpack", "thatleack", "thatlumnan", "theackseancoul", "theacksmiock", "theadreest", "thealfiond",
    "thealpeesh", "thealsnostsmol", "theamdearn", "theamwouck", "theanslet", "thearflurn", "thearja", "thearkre",
    "thearnhur", "thearpraldorn", "thearsairnskin", "theasbagreen", "theasceem", "theasgind", "theasstetdair", "theastklensmou",
    "theatfloar", "theathgrarn", "theathmeat", "theatsnoun", "theattrush", "theeckbrees", "theeckcaplear", "theelproan",
    "theelskurn", "theemburn", "theemcru", "theemhail", "theencirnkrast", "theendreal", "theenjern", "theennees",
    "theequush", "theernreand", "theeshdoan", "theeshsmoas", "theesslomem", "theestpriost", "theeszio", "theetbaim",
    "theethflish", "theetskeand", "thelkim", "thelzoam", "themcrairn", "themcrirn", "themjand", "themvuck",
    "thendsourn", "thendziom", "thenfrailkan", "therjum", "thernglios", "thesgraish", "theshlear", "theshstush",
    "thestshoal", "thethmarnheal", "thethzior", "thewis", "thickkrel", "thickskornpum", "thicktheand", "thilgriock",
    "thilstout", "thilwaind", "thimrend", "thinslesh", "thiockgoand", "thiofleeck", "thiolsnoand", "thiomshen",
    "thiomsnaim", "thiomstroum", "thiomtrir", "thiontheest", "thiopreas", "thiorncham", "thiorncraick", "thiorndar",
    "thiornkraith", "thiornkrath", "thiornpaick", "thiorzees", "thioshkleck", "thioskat", "thiosskeatjo", "thiosthind",
    "thiothblock", "thiothfrio", "thirbrumcleem", "thirfloam", "thirnboush", "thirnbur", "thirnkra", "thirntrest",
    "thishsnoust", "thishstroam", "thistfrees", "thitlin", "thoackkrock", "thoagroarn", "thoalsnoath", "thoamdorn",
    "thoamproash", "thoandbreth", "thoankestkrost", "thoankliom", "thoanouck", "thoaquan", "thoarnreck", "thoarsmoa",
    "thoarthin", "thoasre", "thoassnand", "thoasspick", "thoastplund", "thoastrist", "thoastsmir", "thoatcheem",
    "thoathquordan", "thoathurn", "thoathzom", "thoavur", "thockblean", "thockceeck", "thockcheet", "thockgim",
    "thockspeand", "thogreen", "tholbiond", "tholloand", "thomcoust", "thomgloath", "thommishsiot", "thomvur",
    "thondmoth", "thongreend", "thonroal", "thonsnim", "thoqueernquut", "thorhond", "thorpliorn", "thorshurflan",
    "thorsick", "thosbir", "thoshhond", "thoshjis", "thoshoand", "thoshril", "thosskoshsmel", "thostcrel",
    "thostcrour", "thotreash", "thotsmar", "thouckbrourn", "thouckfrast", "thouckzas", "thoulsoumskas", "thoumskoam",
    "thouncleam", "thoundcheash", "thourklis", "thourkru", "thourspout", "thouscloastkut", "thousjosh", "thouslurgrees",
    "thoustgut", "thoustthou", "thuckkril", "thuckzalgreel", "thulda", "thumcraish", "thumdea", "thundplourn",
    "thundstrearn", "thurnlar", "thurziost", "thussaim", "thusstroal", "thustzoun", "thutflitbin", "thutgrees",
    "thutheelfos", "thuthklaim", "thuthstroas", "thuthteemurn", "tickdethspeas", "tickspel", "tifeat", "timclick",
    "timsmeeck", "timteandmen", "timvost", "timwist", "tincleanthoash", "tingraickplio", "tingrou", "tinliondshis",
    "tinsmoulkros", "tiockhorn", "tiocramnoash", "tiodoan", "tioldaislean", "tiolhest", "tiolhiot", "tionash",
    "tiondnil", "tiondseat", "tiorbin", "tiorklaiwest", "tiornsmou", "tioshfrondgee", "tioshquosh", "tioshshos",
    "tiosnees", "tiostjoustdrun", "tiostthound", "tiosttrost", "tiotcre", "tiothshaick", "tiothweeckglet", "tirglem",
    "tirnwer", "tirspolspith", "tirtriom", "tirvet", "tirzoutkroand", "tispeck", "tisteack", "tistgais",
    "tisttroan", "tistzur", "titdroast", "tithsouhind", "tithzin", "titzoumskund", "toalsmaim", "toamjus",
    "toamskound", "toandcoa", "toandgloul", "toandreshret", "toanjit", "toarnshoust", "toartan", "toasmosflound",
    "toasspeth", "tockclul", "tockspeern", "tomhio", "tondirn", "toqueath", "torbromlend", "torskiol",
    "toshdoan", "toshfern", "toshkan", "toshprond", "toshsnush", "toskeesh", "tostilcleet", "tostworn",
    "tostzoundfleer", "tothoack", "tothstoat", "totniorn", "touckcrist", "toufrum", "toulprior", "toultrouckdish",
    "toummistboash", "toumslaithdrit", "tounbendreat", "tounddriorn", "toundsnaim", "tounjeend", "touquous", "tournnustkeack",
    "tournstroan", "tourntea", "tousnor", "toustkloulsnin", "toustspeern", "touthsas", "trackkumkain", "trackquel",
    "trackwioth", "traicksner", "trailkreen", "traimclus", "traindspeer", "trainvaim", "trairnfin", "trairnspean",
    "traisbleal", "traishnond", "traishvit", "traistmour", "traistsmeth", "traithfush", "traithplea", "traithslos",
    "traitslos", "traitstrush", "traitvurn", "traivuth", "tralfan", "tralsmoasstul", "tramdous", "trankrack",
    "trantraish", "trarnslan", "trarnslous", "trarskend", "trasprond", "trastkroast", "trasttor", "tratbiock",
    "trathstouth", "tratstoackzai", "tratvouloush", "treabrour", "treackgrealhu", "treackmeeth", "trealklirn", "trealwestpri",
    "treamslush", "treanshack", "trearfriom", "treashplir", "treasttresh", "treathslorn", "treathstiom", "treathstrin",
    "treatpoar", "treckpoun", "treeckstril", "treegios", "treeglom", "treelash", "treelhusstrath", "treemcla",
    "treemklun", "treemquist", "treendsaist", "treenkoack", "treensmath", "treerkeas", "treerngum", "treernwoust",
    "treesbist", "treescut", "treeshcrust", "treeshmot", "treeshploam", "treesmorn", "treespin", "treesttust",
    "treethtern", "treetquash", "treetstel", "trelkeast", "tremsmoun", "trendkirn", "trenwush", "trerskut",
    "trerstree", "trerzionddrir", "treshpock", "treshquoun", "treshskeel", "treshvurcrion", "treskrourn", "tresplees",
    "trestgashvour", "trestoarn", "trestspiond", "trestvan", "trethspar", "trethtrem", "trethwait", "trickblound",
    "trickskesh", "triglothboal", "trikri", "trilstriol", "trilthaist", "trimskound", "trimsmeckrios", "trimwind",
    "trindcregleeck", "trindsungral", "triochat", "triockglees", "triocksmee", "triocktoash", "triocoan", "triolbick",
    "triolquos", "triombit", "triomcack", "triomjout", "trioncheend", "trionddios", "trionsmail", "trionspeasdrus",
    "triorcliond", "triorkesvaist", "triorputh", "triorshio", "triorshir", "trioshbroath", "trioshjeash", "trioshsmom",
    "trioskrur", "triospearn", "triostpriosh", "triostspum", "triothcrom", "triotwin", "trirblist", "trirbreal",
    "trirnloathcler", "trirnsmait", "trirsoustveern", "triscroat", "trishot", "trisklaick", "tristeck", "tristit",
    "tristjar", "tristsist", "tristspairn", "tritcheal", "tritciol", "trithcroth", "trithkush", "trithquundfir",
    "trithvil", "tritsion", "troablout", "troackspen", "troacktirn", "troafrorpiock", "troaltil", "troandfiolbear",
    "troandfrear", "troandlor", "troassaind", "troasskoam", "troastskeat", "troatthustheat", "trockprarn", "trockshainmain",
    "trogrernquat", "tromdeatfrout", "tromsleath", "tronquoul", "trornglout", "trorpliosh", "troshchiosh", "trosthish",
    "trostnoas", "trostouck", "trostwuck", "trotdonlil", "trothceam", "trothdrea", "trothsnouck", "trotjeeck",
    "trouckcher", "trouckskor", "troujees", "troulcrick", "troulfout", "troumdroumvick", "troumthastras", "trouncleesh",
    "troundpri", "trourbroust", "trourcrunmel", "trourgrum", "trournleer", "trournquos", "trourntrair", "trousdeast",
    "trousflot", "trousgath", "troushqui", "troustbrolan", "troustmarn", "troustmeas", "trousttoand", "troustzour",
    "trouthcil", "trouthspeend", "troutplin", "troutraish", "truful", "trulblet", "trulzock", "trumsnend",
    "trundthetkiom", "trundveend", "trunspoast", "trurgroush", "trurnhiot", "trusploarn", "trussout", "trusspeenma",
    "trustmea", "trustsickhoul", "trustsiock", "trutsoat", "trutstionsloum", "truvail", "tuckmind", "tudem",
    "tukanstoum", "tulbothkrack", "tulnot", "tulsmeatgouck", "tulzoush", "tumbin", "tumdriost", "tunddrind",
    "tundfrun", "tunskorn", "tunsmalweest", "tunsteandstot", "turkrourntast", "turthoand", "tusbrost", "tushblios",
    "tushdildoat", "tusskoast", "tusspiol", "tustpleega", "tuthsis", "tutthait", "tuttral", "vackdaindrait",
    "vackploas", "vackskith", "vafreand", "vaickcland", "vaickproum", "vaimpluth", "vaimsnoar", "vainceeshvend",
    "vaindjos", "vainleeckroam", "vairnpeern", "vairshar", "vaisgrormand", "vaishbruthciom", "vaishchu", "vaishcriosh",
    "vaismun", "vaisream", "vaithdaith", "vaithseack", "vaitjaltrist", "vajoalpash", "valchuthslir", "valgru",
    "vamparn", "vancheack", "vandkiosh", "vanflacoam", "vanplous", "vansleck", "vapaiwiorn", "varbitkaish",
    "varncreaqueam", "vaschoas", "vascrustslon", "vashaist", "vastbioth", "vastslon", "vastwoum", "vatblou",
    "vatcraish", "vathgloarn", "vathslaist", "veacliost", "veafroul", "vealtreas", "veamsnath", "veancrath",
    "veandblish", "veandpound", "veaporpliom", "vearsnaish", "veascreash", "veashklairn", "veasskushzund", "veastzound",
    "veatglin", "veathcleest", "veathjeestwurn", "veblack", "veckpean", "veckskiosh", "vedis", "veegrur",
    "veelnealam", "veelthos", "veemcloth", "veemduncrel", "veenskear", "veerdoarn", "veerfreesh", "veerglearn",
    "veerndraim", "veernkroarn", "veernmiot", "veernprir", "veesber", "veesfroan", "veeshduth", "veesmet",
    "veestborpoash", "veestcroas", "veetfrio", "veettuck", "velfrus", "velmamcriot", "vemdroa", "vencrash",
    "vendklel", "vendthick", "venem", "venskeand", "venspearn", "vernnot", "vernquourn", "veshstrit",
    "veslol", "vesqueeck", "vestgreeck", "vestjetfliosh", "vestspeas", "vesttot", "veszat", "vethclio",
    "vethcrul", "vethfend", "vetquon", "viban", "vickbrust", "vickfloar", "vildriond", "vimjouck",
    "vindtrio", "vinfond", "vinloun", "vinqueandfloun", "vinziost", "viockfait", "viockfoatcrond", "vioglund",
    "viojeack", "violpoack", "viomrot", "viomtrit", "vionclear", "viondchi", "viondquoat", "viongreest",
    "viorglees", "viorpum", "viorslaindzaim", "vioshcrurn", "vioshspaind", "viospal", "viostgroal", "viostmair",
    "viostnuth", "vioststeat", "viostzath", "viothel", "viothplishzat", "viothsketh", "viotquernrio", "virjo",
    "virnskim", "virnsmishkat", "visbrush", "visdrondpleet", "visprais", "vistklurn", "vitgai", "vithflair",
    "vitkloutproun", "voacheast", "voackdrurnbrel", "voakern", "voalfais", "voalskoultound", "voamjand", "voandear",
    "voandpriomruth", "voandselprul", "voanfliost", "voarncroas", "voarntearn", "voarsmoutdoum", "voasgrioshflem", "voashjoam",
    "voashskond", "voashslelgleet", "voastcroand", "voaststaind", "voastviorn", "voathcheecrous", "vockbren", "vockmourposh",
    "voglem", "volcleam", "volmeern", "vomclal", "vomclan", "vomdreath", "vondspeen", "vondspees",
    "vorncloarn", "vornzeam", "vorsnim", "vorstrinddrul", "voshbun", "voshlion", "vosteammes", "vostkout",
    "votkourn", "votpriochon", "votsnen", "vottoan", "voucknoth", "vouckvo", "vougroand", "voulslot",
    "voumklean", "vounchon", "vourngreem", "voushkloal", "vousjeet", "vousli", "vousprast", "vousspeer",
    "voutpaind", "vuckcreankoam", "vuckmith", "vuckproth", "vuckslous", "vuljeath", "vulmeen", "vumstemklait",
    "vundstriot", "vurnandcus", "vurngleesh", "vursmish", "vushplis", "vusniosplath", "vusplar", "vuthseesrarn",
    "vutwandtos", "vutziond", "waickdrost", "waickporn", "waickzel", "wailwul", "waimslickthoam", "waindgim",
    "waindniond", "waindthealoth", "wainpluth", "wainstondjaim", "waiquean", "wairdiorn", "wairnslaith", "wairnziond",
    "waisdimmait", "waishhiocksmu", "waishpul", "waisprear", "waistcrest", "waistglear", "waistglith", "waithzioshzast",
    "waitpliosh", "waitrair", "waittho", "walkroath", "wamgrind", "wamsnin", "wandtream", "wandtreem",
    "wandtrum", "wangist", "wanglail", "wanheeth", "warnsmut", "washdorglack", "waskloack", "waspour",
    "wasslon", "wastdreen", "wastfeand", "wastjocksmound", "wastrust", "wasza", "weabiflith", "weackbeet",
    "weackdroam", "weackspeth", "weackweeshzost", "weamfloun", "weamjondstum", "weamstras", "weanwoas", "wearbound",
    "weashkleeniot", "weashkur", "weashneest", "weashsmeck", "weastkloarhior", "weatbais", "weatheerchoam", "weattrougrash",
    "weckshaish", "weebouck", "weeckblout", "weeckploas", "weeckstout", "weelblimtet", "weelbundjim", "weelchat",
    "weelwoul", "weelwout", "weemjaim", "weemprast", "weenblou", "weendbun", "weendstoust", "weengleand",
    "weenspairquuck", "weentouljick", "weerdondchiosh", "weerke", "weernklund", "weerntend", "weerwion", "weerziorn",
    "weeshquist", "weesshish", "weesstrirn", "weestclior", "weestflain", "weestgleel", "weestshernrean", "weesttupuck",
    "weetdoack", "weethbliost", "weethbroand", "weethkus", "welcream", "welhaist", "welreem", "welsper",
    "wemdrees", "wemqueshkris", "wemroar", "wennurn", "wenslosh", "wenzoat", "werbeastrer", "werngraist",
    "wesblar", "wesbock", "weshflish", "wesqueashhour", "wethgiomsneern", "wethklurn", "wethstaist", "wethweth",
    "wetplost", "wickcrean", "wimcheash", "wimfiost", "wimklosh", "wimmand", "wimwurn", "windergil",
    "winfiquor", "winteeth", "wiocknai", "wiommem", "wiomplast", "wiomsmern", "wionfrath", "wionitses",
    "wiorglirn", "wiornspeesh", "wiorntriock", "wiorwezen", "wioschirn", "wioscoack", "wiosgetcrost", "wiostsnit",
    "wirflaick", "wirngick", "wirnhurglosh", "wirnsmen", "wirpaith", "wirplel", "wirvairn", "wirzeeth",
    "wismoal", "wisnicksniock", "wistroand", "withhurdrel", "withthun", "withzut", "woackbilgloas", "woackboar",
    "woackwio", "woaget", "woalquet", "woalroa", "woamchot", "woanchour", "woandclicreesh", "woanlur",
    "woarnkluth", "woartroash", "woascais", "woasmoack", "woasmouku", "woassnain", "woastvos", "woathploal",
    "woatjock", "woatlist", "wockgloutpairn", "wolcrumkraith", "wolglaick", "wolkuck", "wolsmouthfar", "wondcaithtiot",
    "wonheath", "wonzeack", "worbios", "worgrair", "wornshoul", "wortriond", "wosdeer", "wosdraith",
    "wosfloarntait", "woshcleem", "woshcound", "woshoundstash", "woshseand", "wostceat", "wostcoureck", "wotfar",
    "wotgrath", "wothgoamceen", "wotsnust", "wouckche", "wouckrem", "woulsoast", "woundeesh", "woundmeeth",
    "wournglulvosh", "wournnousrand", "wourslealdriom", "woushdroand", "woustbrourn", "woustchoand", "woustfrior", "woutheen",
    "woutsnoush", "wuckdros", "wulhonsnear", "wulklais", "wulmem", "wulroum", "wundglor", "wurcath",
    "wurngim", "wurpram", "wusfrearn", "wusgleash", "wushclerstour", "wushcloas", "wushskeesh", "wustkrairn",
    "wustsoas", "wuthound", "wuthpoar", "wuthsnoshpiot", "wutspeer", "zackbleer", "zaibliol", "zaiflourn",
    "zailflutblest", "zaimbath", "zaimskeash", "zaintroast", "zainvethheas", "zairnbrun", "zairnnain", "zairntind",
    "zaischourn", "zaisclail", "zaishsarn", "zaistpost", "zaistsneand", "zaistwous", "zaithdreest", "zaithtrouth",
    "zaldelgroa", "zalstuck", "zambreernsmeem", "zandgosh", "zandpes", "zandres", "zandstai", "zanfounddral",
    "zanskiost", "zarfreash", "zarnfoal", "zascarn", "zascroas", "zashflaistthee", "zashhoustta", "zashwum",
    "zasstram", "zasttet", "zaswoamcham", "zaszon", "zatgreangree", "zeacourn", "zeakran", "zealneam",
    "zealrar", "zeamstuck", "zeamveem", "zeanclockjou", "zeandoal", "zeandspickwoat", "zeandzisseas", "zeaproarncind",
    "zearnmer", "zearsteeth", "zeasbin", "zeasbroand", "zeasfrus", "zeasglee", "zeashbrack", "zeashskior",
    "zeastklor", "zeastklost", "zeastpith", "zeathstreern", "zeathtour", "zeckwoalkist", "zeekairndou", "zeendbloansear",
    "zeendkror", "zeendslel", "zeendtheath", "zeendveas", "zeenleer", "zeernkindtrio", "zeeshvorn", "zeeskouckdoar",
    "zeespoath", "zeessteclaick", "zeestthim", "zeethcoth", "zeethgleesh", "zelther", "zemstond", "zencrour",
    "zenmiond", "zenwaimstim", "zernmeest", "zernspoan", "zeshest", "zeshnut", "zessmeash", "zesthet",
    "zeststaick", "zetcloul", "zethgram", "zethpirn", "zetromsir", "zibust", "zickdreth", "zicktouck",
    "zilflail", "zilfroarn", "zilnorn", "zimplatprest", "zindkeash", "zinplearn", "ziocksnoth", "ziockstriock",
    "ziohaist", "ziomclastkom", "ziomeestchouth", "zionskeagrais", "zionsmair", "ziontais", "zionti", "zionzair",
    "zioproa", "ziorcealskeam", "zioscosdearn", "ziosglos", "zioshsock", "zioshspior", "zioshstren", "ziosmaim",
    "ziostblio", "ziostfoush", "ziotclosh", "zirncairn", "zirndroast", "zirpees", "zispril", "zistzemfund",
    "zithkir", "zoackcrol", "zoacksheth", "zoackthaflim", "zoacri", "zoaduthblern", "zoalgleesh", "zoalrait",
    "zoalsloun", "zoamklaith", "zoamplaith", "zoandcrend", "zoandgleath", "zoanja", "zoanpiol", "zoansmiom",
    "zoanstra", "zoarklesh", "zoarnci", "zoarncroust", "zoarnglal", "zoarsnotquiock", "zoascan", "zoastgoadios",
    "zoatgin", "zoathbern", "zoathsea", "zoathsnu", "zoatkrior", "zoatsnoand", "zockcheat", "zockclack",
    "zocktraish", "zolcrarstrond", "zomskem", "zomtiock", "zondkroast", "zondsherntrus", "zongram", "zonpand",
    "zonseem", "zornchiock", "zorngrioth", "zorniot", "zornnend", "zoshdoust", "zoshklail", "zoshsnoun",
    "zoshthoal", "zosplaim", "zosrest", "zostbriornmai", "zostsmeast", "zothret", "zothzeck", "zotzeenwat",
    "zoucheesiorn", "zouckbish", "zoucoamsorn", "zoujerbron", "zoumnet", "zounchoar", "zoundskiot", "zounfearn",
    "zoungrend", "zounkleer", "zounnair", "zouplast", "zournfreeck", "zournost", "zournzistglous", "zoushdeeck",
    "zoushprot", "zousjeern", "zouswenwiorn", "zoutprol", "zuboarn", "zuckcraith", "zulfrouth", "zulgeet",
    "zulskesh", "zumtrack", "zundbesklern", "zundkliol", "zurhen", "zurnflouck", "zusdoack", "zusdreaplol",
    "zusfosh", "zusgrain", "zusstarn", "zuthbloat", "zuthdri", "zuthreast", "zutkeel", "zutquist",
};

const std::vector<std::string>& wordlist() {
    static const std::vector<std::string> words(std::begin(kWords), std::end(kWords));
    return words;
}

} // namespace graffiti
