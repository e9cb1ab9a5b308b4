#include "emoscan/categories.hpp"

namespace emoscan {

std::string_view to_string(EmotionCategory c) {
    switch (c) {
        case EmotionCategory::HAPPINESS: return "HAPPINESS";
        case EmotionCategory::SADNESS: return "SADNESS";
        case EmotionCategory::FEAR: return "FEAR";
        case EmotionCategory::ANGER: return "ANGER";
        case EmotionCategory::SURPRISE: return "SURPRISE";
        case EmotionCategory::DISGUST: return "DISGUST";
    }
    return "?";
}

std::string_view to_string(IntensityCategory i) {
    switch (i) {
        case IntensityCategory::STRONG: return "STRONG";
        case IntensityCategory::MEDIUM: return "MEDIUM";
        case IntensityCategory::LIGHT: return "LIGHT";
    }
    return "?";
}

std::string_view to_string(DegreeIntensity d) {
    switch (d) {
        case DegreeIntensity::H: return "H";
        case DegreeIntensity::L: return "L";
        case DegreeIntensity::N: return "N";
        case DegreeIntensity::NONE: return "NONE";
    }
    return "?";
}

std::string_view to_string(Person p) {
    switch (p) {
        case Person::FIRST: return "FIRST";
        case Person::SECOND: return "SECOND";
        case Person::THIRD: return "THIRD";
    }
    return "?";
}

std::optional<EmotionCategory> parse_category(std::string_view s) {
    for (EmotionCategory c : kAllCategories)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

std::optional<IntensityCategory> parse_intensity(std::string_view s) {
    if (s == "STRONG") return IntensityCategory::STRONG;
    if (s == "MEDIUM") return IntensityCategory::MEDIUM;
    if (s == "LIGHT") return IntensityCategory::LIGHT;
    return std::nullopt;
}

std::optional<DegreeIntensity> parse_degree(std::string_view s) {
    if (s == "H") return DegreeIntensity::H;
    if (s == "L") return DegreeIntensity::L;
    if (s == "N") return DegreeIntensity::N;
    if (s == "NONE") return DegreeIntensity::NONE;
    return std::nullopt;
}

std::optional<Person> parse_person(std::string_view s) {
    if (s == "FIRST") return Person::FIRST;
    if (s == "SECOND") return Person::SECOND;
    if (s == "THIRD") return Person::THIRD;
    return std::nullopt;
}

}  // namespace emoscan
