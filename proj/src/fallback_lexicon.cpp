#include <cstddef>

namespace xmlclust::lexicon_detail {

struct LexiconEntry {
    const char* surface;
    const char* pos;
    const char* lemma;
};

// Closed-class entries plus a seed of verbs and adjectives common in
// research prose. Everything the suffix heuristics would misread badly
// belongs here.
extern const LexiconEntry kBuiltinLexicon[];
extern const std::size_t kBuiltinLexiconSize;

const LexiconEntry kBuiltinLexicon[] = {
    // determiners
    {"the", "DT", "the"}, {"a", "DT", "a"}, {"an", "DT", "a"},
    {"this", "DT", "this"}, {"that", "DT", "that"}, {"these", "DT", "this"},
    {"those", "DT", "that"}, {"each", "DT", "each"}, {"every", "DT", "every"},
    {"some", "DT", "some"}, {"any", "DT", "any"}, {"no", "DT", "no"},
    {"all", "DT", "all"}, {"both", "DT", "both"}, {"either", "DT", "either"},
    {"neither", "DT", "neither"}, {"such", "DT", "such"},
    {"another", "DT", "another"},
    // prepositions
    {"of", "IN", "of"}, {"in", "IN", "in"}, {"for", "IN", "for"},
    {"with", "IN", "with"}, {"on", "IN", "on"}, {"at", "IN", "at"},
    {"by", "IN", "by"}, {"from", "IN", "from"}, {"about", "IN", "about"},
    {"as", "IN", "as"}, {"into", "IN", "into"}, {"through", "IN", "through"},
    {"during", "IN", "during"}, {"before", "IN", "before"},
    {"after", "IN", "after"}, {"above", "IN", "above"},
    {"below", "IN", "below"}, {"between", "IN", "between"},
    {"under", "IN", "under"}, {"over", "IN", "over"},
    {"against", "IN", "against"}, {"among", "IN", "among"},
    {"within", "IN", "within"}, {"without", "IN", "without"},
    {"toward", "IN", "toward"}, {"towards", "IN", "towards"},
    {"upon", "IN", "upon"}, {"across", "IN", "across"},
    {"behind", "IN", "behind"}, {"beyond", "IN", "beyond"},
    {"via", "IN", "via"}, {"per", "IN", "per"}, {"up", "IN", "up"},
    {"down", "IN", "down"}, {"off", "IN", "off"}, {"near", "IN", "near"},
    {"since", "IN", "since"}, {"until", "IN", "until"},
    {"despite", "IN", "despite"}, {"except", "IN", "except"},
    {"around", "IN", "around"}, {"along", "IN", "along"},
    {"amid", "IN", "amid"}, {"to", "TO", "to"},
    // conjunctions
    {"and", "CC", "and"}, {"or", "CC", "or"}, {"but", "CC", "but"},
    {"nor", "CC", "nor"}, {"so", "CC", "so"}, {"yet", "CC", "yet"},
    {"plus", "CC", "plus"},
    {"because", "IN", "because"}, {"although", "IN", "although"},
    {"though", "IN", "though"}, {"while", "IN", "while"},
    {"if", "IN", "if"}, {"unless", "IN", "unless"},
    {"whereas", "IN", "whereas"}, {"whether", "IN", "whether"},
    // pronouns
    {"i", "PP", "i"}, {"you", "PP", "you"}, {"he", "PP", "he"},
    {"she", "PP", "she"}, {"it", "PP", "it"}, {"we", "PP", "we"},
    {"they", "PP", "they"}, {"me", "PP", "me"}, {"him", "PP", "him"},
    {"her", "PP", "her"}, {"us", "PP", "us"}, {"them", "PP", "them"},
    {"myself", "PP", "myself"}, {"yourself", "PP", "yourself"},
    {"himself", "PP", "himself"}, {"herself", "PP", "herself"},
    {"itself", "PP", "itself"}, {"ourselves", "PP", "ourselves"},
    {"themselves", "PP", "themselves"}, {"oneself", "PP", "oneself"},
    {"my", "PP$", "my"}, {"your", "PP$", "your"}, {"his", "PP$", "his"},
    {"its", "PP$", "its"}, {"their", "PP$", "their"}, {"our", "PP$", "our"},
    {"mine", "PP$", "mine"}, {"yours", "PP$", "yours"},
    {"theirs", "PP$", "theirs"}, {"ours", "PP$", "ours"},
    {"who", "WP", "who"}, {"whom", "WP", "whom"}, {"what", "WP", "what"},
    {"whose", "WP$", "whose"}, {"which", "WDT", "which"},
    {"when", "WRB", "when"}, {"where", "WRB", "where"},
    {"why", "WRB", "why"}, {"how", "WRB", "how"}, {"there", "EX", "there"},
    // be / have / do
    {"be", "VB", "be"}, {"am", "VBP", "be"}, {"is", "VBZ", "be"},
    {"are", "VBP", "be"}, {"was", "VBD", "be"}, {"were", "VBD", "be"},
    {"been", "VBN", "be"}, {"being", "VBG", "be"},
    {"have", "VHP", "have"}, {"has", "VHZ", "have"}, {"had", "VHD", "have"},
    {"having", "VHG", "have"},
    {"do", "VVP", "do"}, {"does", "VVZ", "do"}, {"did", "VVD", "do"},
    {"doing", "VVG", "do"}, {"done", "VVN", "do"},
    // modals
    {"will", "MD", "will"}, {"would", "MD", "would"}, {"can", "MD", "can"},
    {"could", "MD", "could"}, {"may", "MD", "may"}, {"might", "MD", "might"},
    {"shall", "MD", "shall"}, {"should", "MD", "should"},
    {"must", "MD", "must"},
    // adverbs
    {"not", "RB", "not"}, {"very", "RB", "very"}, {"also", "RB", "also"},
    {"often", "RB", "often"}, {"never", "RB", "never"},
    {"always", "RB", "always"}, {"usually", "RB", "usually"},
    {"however", "RB", "however"}, {"thus", "RB", "thus"},
    {"therefore", "RB", "therefore"}, {"then", "RB", "then"},
    {"here", "RB", "here"}, {"now", "RB", "now"}, {"more", "RB", "more"},
    {"most", "RB", "most"}, {"less", "RB", "less"}, {"least", "RB", "least"},
    {"only", "RB", "only"}, {"just", "RB", "just"}, {"well", "RB", "well"},
    {"still", "RB", "still"}, {"already", "RB", "already"},
    {"again", "RB", "again"}, {"rather", "RB", "rather"},
    {"quite", "RB", "quite"}, {"too", "RB", "too"},
    {"almost", "RB", "almost"}, {"perhaps", "RB", "perhaps"},
    {"moreover", "RB", "moreover"}, {"furthermore", "RB", "furthermore"},
    {"nevertheless", "RB", "nevertheless"}, {"hence", "RB", "hence"},
    {"together", "RB", "together"}, {"instead", "RB", "instead"},
    {"otherwise", "RB", "otherwise"}, {"indeed", "RB", "indeed"},
    {"mainly", "RB", "mainly"}, {"respectively", "RB", "respectively"},
    {"particularly", "RB", "particularly"},
    {"especially", "RB", "especially"}, {"highly", "RB", "highly"},
    {"widely", "RB", "widely"}, {"rarely", "RB", "rarely"},
    {"sometimes", "RB", "sometimes"}, {"strongly", "RB", "strongly"},
    {"currently", "RB", "currently"}, {"recently", "RB", "recently"},
    // small numbers
    {"zero", "CD", "zero"}, {"one", "CD", "one"}, {"two", "CD", "two"},
    {"three", "CD", "three"}, {"four", "CD", "four"}, {"five", "CD", "five"},
    {"six", "CD", "six"}, {"seven", "CD", "seven"}, {"eight", "CD", "eight"},
    {"nine", "CD", "nine"}, {"ten", "CD", "ten"},
    // seed verbs
    {"converge", "VV", "converge"}, {"diverge", "VV", "diverge"},
    {"compute", "VV", "compute"}, {"analyze", "VV", "analyze"},
    {"analyse", "VV", "analyse"}, {"develop", "VV", "develop"},
    {"propose", "VV", "propose"}, {"present", "VV", "present"},
    {"describe", "VV", "describe"}, {"define", "VV", "define"},
    {"study", "VV", "study"}, {"investigate", "VV", "investigate"},
    {"evaluate", "VV", "evaluate"}, {"implement", "VV", "implement"},
    {"introduce", "VV", "introduce"}, {"improve", "VV", "improve"},
    {"provide", "VV", "provide"}, {"consider", "VV", "consider"},
    {"obtain", "VV", "obtain"}, {"derive", "VV", "derive"},
    {"prove", "VV", "prove"}, {"apply", "VV", "apply"},
    {"extend", "VV", "extend"}, {"combine", "VV", "combine"},
    {"compare", "VV", "compare"}, {"solve", "VV", "solve"},
    {"rely", "VV", "rely"}, {"depend", "VV", "depend"},
    {"perform", "VV", "perform"}, {"allow", "VV", "allow"},
    {"require", "VV", "require"}, {"enable", "VV", "enable"},
    {"achieve", "VV", "achieve"}, {"involve", "VV", "involve"},
    {"include", "VV", "include"}, {"exploit", "VV", "exploit"},
    {"demonstrate", "VV", "demonstrate"},
    {"contribute", "VV", "contribute"}, {"focus", "VV", "focus"},
    {"address", "VV", "address"}, {"publish", "VV", "publish"},
    {"collaborate", "VV", "collaborate"},
    {"participate", "VV", "participate"}, {"estimate", "VV", "estimate"},
    {"predict", "VV", "predict"}, {"detect", "VV", "detect"},
    {"select", "VV", "select"}, {"observe", "VV", "observe"},
    {"explore", "VV", "explore"}, {"examine", "VV", "examine"},
    {"illustrate", "VV", "illustrate"}, {"conclude", "VV", "conclude"},
    {"discuss", "VV", "discuss"}, {"explain", "VV", "explain"},
    {"support", "VV", "support"}, {"enhance", "VV", "enhance"},
    {"integrate", "VV", "integrate"}, {"reduce", "VV", "reduce"},
    {"increase", "VV", "increase"}, {"seem", "VV", "seem"},
    {"become", "VV", "become"}, {"remain", "VV", "remain"},
    {"contain", "VV", "contain"}, {"exist", "VV", "exist"},
    {"occur", "VV", "occur"}, {"appear", "VV", "appear"},
    {"follow", "VV", "follow"}, {"need", "VV", "need"},
    {"want", "VV", "want"}, {"show", "VV", "show"}, {"try", "VV", "try"},
    // seed adjectives
    {"new", "JJ", "new"}, {"novel", "JJ", "novel"},
    {"robust", "JJ", "robust"}, {"efficient", "JJ", "efficient"},
    {"sparse", "JJ", "sparse"}, {"dense", "JJ", "dense"},
    {"fast", "JJ", "fast"}, {"slow", "JJ", "slow"},
    {"large", "JJ", "large"}, {"small", "JJ", "small"},
    {"high", "JJ", "high"}, {"low", "JJ", "low"}, {"main", "JJ", "main"},
    {"common", "JJ", "common"}, {"general", "JJ", "general"},
    {"specific", "JJ", "specific"}, {"important", "JJ", "important"},
    {"significant", "JJ", "significant"}, {"recent", "JJ", "recent"},
    {"current", "JJ", "current"}, {"previous", "JJ", "previous"},
    {"several", "JJ", "several"}, {"many", "JJ", "many"},
    {"few", "JJ", "few"}, {"good", "JJ", "good"},
    {"strong", "JJ", "strong"}, {"weak", "JJ", "weak"},
    {"deep", "JJ", "deep"}, {"broad", "JJ", "broad"},
    {"relevant", "JJ", "relevant"}, {"possible", "JJ", "possible"},
    {"available", "JJ", "available"}, {"simple", "JJ", "simple"},
    {"different", "JJ", "different"}, {"similar", "JJ", "similar"},
    {"other", "JJ", "other"}, {"same", "JJ", "same"},
    {"first", "JJ", "first"}, {"second", "JJ", "second"},
    {"third", "JJ", "third"}, {"last", "JJ", "last"}, {"next", "JJ", "next"},
};

const std::size_t kBuiltinLexiconSize =
    sizeof(kBuiltinLexicon) / sizeof(kBuiltinLexicon[0]);

}  // namespace xmlclust::lexicon_detail
