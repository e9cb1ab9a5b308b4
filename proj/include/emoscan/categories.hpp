#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace emoscan {

// Canonical order. All tie-breaking and serialization uses this order.
enum class EmotionCategory : std::uint8_t {
    HAPPINESS = 0,
    SADNESS,
    FEAR,
    ANGER,
    SURPRISE,
    DISGUST,
};

inline constexpr std::size_t kNumCategories = 6;

inline constexpr std::array<EmotionCategory, kNumCategories> kAllCategories = {
    EmotionCategory::HAPPINESS, EmotionCategory::SADNESS,
    EmotionCategory::FEAR,      EmotionCategory::ANGER,
    EmotionCategory::SURPRISE,  EmotionCategory::DISGUST,
};

enum class IntensityCategory : std::uint8_t {
    STRONG = 0,
    MEDIUM,
    LIGHT,
};

// H = high multiplying effect, L = low, N = negation, NONE = no degree word.
enum class DegreeIntensity : std::uint8_t {
    H = 0,
    L,
    N,
    NONE,
};

enum class Person : std::uint8_t {
    FIRST = 0,
    SECOND,
    THIRD,
};

std::string_view to_string(EmotionCategory c);
std::string_view to_string(IntensityCategory i);
std::string_view to_string(DegreeIntensity d);
std::string_view to_string(Person p);

std::optional<EmotionCategory> parse_category(std::string_view s);
std::optional<IntensityCategory> parse_intensity(std::string_view s);
std::optional<DegreeIntensity> parse_degree(std::string_view s);
std::optional<Person> parse_person(std::string_view s);

constexpr std::size_t index_of(EmotionCategory c) {
    return static_cast<std::size_t>(c);
}

constexpr EmotionCategory category_at(std::size_t i) {
    return kAllCategories[i];
}

}  // namespace emoscan
