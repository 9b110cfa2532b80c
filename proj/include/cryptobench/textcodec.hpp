#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace cryptobench {

inline constexpr int kAlphabetSize = 26;

/// Letter numbering convention. Caesar and RSA count from A=1, Vigenère
/// from A=0; each cipher module states which one it uses.
enum class Indexing { ZeroBased, OneBased };

/// A string holding only the uppercase letters A-Z.
class NormalizedText {
public:
    NormalizedText() = default;

    /// Wraps `letters` as-is; throws InvalidLetter if anything but A-Z appears.
    static NormalizedText from_letters(std::string letters);

    const std::string& str() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    friend bool operator==(const NormalizedText&, const NormalizedText&) = default;

private:
    struct Unchecked {};
    NormalizedText(std::string letters, Unchecked) : letters_(std::move(letters)) {}

    std::string letters_;

    friend NormalizedText normalize(std::string_view text);
    friend class TextBuilder;
};

/// Uppercases ASCII letters and drops everything else, keeping order.
NormalizedText normalize(std::string_view text);

/// Accumulates letters produced by cipher code that already guarantees A-Z.
class TextBuilder {
public:
    explicit TextBuilder(std::size_t reserve = 0) { letters_.reserve(reserve); }
    void push_back(char letter) { letters_.push_back(letter); }
    NormalizedText finish() && { return NormalizedText(std::move(letters_), NormalizedText::Unchecked{}); }

private:
    std::string letters_;
};

bool is_upper_letter(char c) noexcept;

int letter_to_index(char letter, Indexing indexing);

/// Inverse of letter_to_index. Under OneBased, 0 is accepted as an alias for Z
/// so that residues mod 26 always decode.
char index_to_letter(int value, Indexing indexing);

}  // namespace cryptobench
