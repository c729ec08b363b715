#include "sumforge/corpus.hpp"

namespace sumforge {

namespace {

// Keep in sync with data/stopwords/english.txt; a unit test compares them.
constexpr const char* kEnglishStopwords[] = {
    "a", "about", "above", "across", "after", "again", "against", "al", "all",
    "along", "also", "although", "always", "am", "among", "an", "and", "any",
    "are", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "beyond", "both", "but", "by", "can", "cannot", "could",
    "despite", "did", "do", "does", "doing", "down", "during", "each",
    "either", "et", "etc", "ever", "every", "few", "for", "from", "further",
    "furthermore", "had", "has", "have", "having", "he", "hence", "her",
    "here", "hers", "herself", "him", "himself", "his", "how", "however",
    "i", "if", "in", "instead", "into", "is", "it", "its", "itself", "just",
    "like", "many", "may", "me", "might", "more", "moreover", "most", "much",
    "must", "my", "myself", "neither", "nevertheless", "no", "nor", "not",
    "of", "off", "often", "on", "once", "only", "onto", "or", "other",
    "ought", "our", "ours", "ourselves", "out", "over", "own", "per",
    "rather", "same", "shall", "she", "should", "since", "so", "some",
    "still", "such", "than", "that", "the", "their", "theirs", "them",
    "themselves", "then", "there", "therefore", "these", "they", "this",
    "those", "though", "through", "thus", "to", "too", "toward", "towards",
    "under", "unless", "until", "up", "upon", "very", "via", "was", "we",
    "were", "what", "when", "where", "whereas", "whether", "which", "while",
    "who", "whom", "why", "will", "with", "within", "without", "would",
    "yet", "you", "your", "yours", "yourself", "yourselves",
};

} // namespace

const StopwordSet& default_stopwords() {
    static const StopwordSet words(std::begin(kEnglishStopwords),
                                   std::end(kEnglishStopwords));
    return words;
}

} // namespace sumforge
