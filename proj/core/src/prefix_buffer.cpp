#include "wordcomp/prefix_buffer.hpp"

#include <algorithm>
#include <cstdlib>

namespace wordcomp {

std::size_t PrefixBuffer::default_cap() {
  if (const char* env = std::getenv("WORDCOMP_PREFIX_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

PrefixBuffer::PrefixBuffer(Source source, std::size_t cap)
    : source_(std::move(source)), cap_(cap) {
  if (cap_ == 0) throw CapExceededError("prefix cap must be positive");
  if (auto* ms = std::get_if<MorphicSource>(&source_)) {
    const Morphism& m = ms->morphism;
    if (!m.is_prolongable(ms->seed)) {
      if (m.alphabet().contains(ms->seed) && !m.image(ms->seed).empty() &&
          m.image(ms->seed)[0] == ms->seed) {
        throw NonExpandingError("fixed point of seed " + std::to_string(ms->seed) +
                                " is finite");
      }
      throw NotProlongableError("morphism is not prolongable on letter " +
                                std::to_string(ms->seed));
    }
    if (ms->coding) {
      std::vector<Letter> targets;
      for (Letter a : m.alphabet().letters()) targets.push_back(ms->coding->map(a));
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      alphabet_ = Alphabet(std::move(targets));
      uncoded_ = m.image(ms->seed);
      for (Letter a : uncoded_) letters_.push_back(ms->coding->map(a));
    } else {
      alphabet_ = m.alphabet();
      letters_ = m.image(ms->seed);
    }
    expanded_ = 1;
  } else if (auto* ls = std::get_if<LiteralSource>(&source_)) {
    alphabet_ = Alphabet::of_word(ls->word);
    letters_.assign(ls->word.begin(),
                    ls->word.begin() + std::min(ls->word.size(), cap_));
    exhausted_ = letters_.size() == ls->word.size();
  } else {
    auto& ps = std::get<PeriodicSource>(source_);
    if (ps.period.empty()) throw ParseError("periodic source needs a nonempty period");
    Word all(ps.preperiod);
    all.insert(all.end(), ps.period.begin(), ps.period.end());
    alphabet_ = Alphabet::of_word(all);
  }
  if (letters_.size() > cap_) letters_.resize(cap_);
  if (uncoded_.size() > cap_) uncoded_.resize(cap_);
  // Reserve once, after initial content: later extension never reallocates,
  // so concurrent readers of the materialized view stay valid.
  letters_.reserve(cap_);
  if (auto* ms = std::get_if<MorphicSource>(&source_); ms && ms->coding) {
    uncoded_.reserve(cap_);
  }
}

PrefixBuffer PrefixBuffer::morphic(Morphism m, Letter seed, std::optional<Coding> coding,
                                   std::size_t cap) {
  return PrefixBuffer(MorphicSource{std::move(m), seed, std::move(coding)}, cap);
}
PrefixBuffer PrefixBuffer::literal(Word w, std::size_t cap) {
  return PrefixBuffer(LiteralSource{std::move(w)}, cap);
}
PrefixBuffer PrefixBuffer::periodic(Word preperiod, Word period, std::size_t cap) {
  return PrefixBuffer(PeriodicSource{std::move(preperiod), std::move(period)}, cap);
}

void PrefixBuffer::extend_to(std::size_t len) {
  len = std::min(len, cap_);
  if (letters_.size() >= len || exhausted_) return;

  if (auto* ms = std::get_if<MorphicSource>(&source_)) {
    const Morphism& m = ms->morphism;
    Word& fixed = ms->coding ? uncoded_ : letters_;
    while (fixed.size() < len) {
      if (expanded_ >= fixed.size()) {
        // fixed is a finite fixed point of the morphism
        exhausted_ = true;
        break;
      }
      const Word& img = m.image(fixed[expanded_]);
      std::size_t room = cap_ - fixed.size();
      std::size_t take = std::min(img.size(), room);
      fixed.insert(fixed.end(), img.begin(), img.begin() + take);
      if (take < img.size()) break;  // cap reached mid-image; resume later is unsound
      ++expanded_;
    }
    if (ms->coding) {
      for (std::size_t i = letters_.size(); i < std::min(fixed.size(), len); ++i) {
        letters_.push_back(ms->coding->map(fixed[i]));
      }
    }
  } else if (auto* ls = std::get_if<LiteralSource>(&source_)) {
    std::size_t take = std::min(len, ls->word.size());
    for (std::size_t i = letters_.size(); i < take; ++i) letters_.push_back(ls->word[i]);
    exhausted_ = letters_.size() == ls->word.size();
  } else {
    auto& ps = std::get<PeriodicSource>(source_);
    while (letters_.size() < len) {
      std::size_t i = letters_.size();
      if (i < ps.preperiod.size()) {
        letters_.push_back(ps.preperiod[i]);
      } else {
        letters_.push_back(ps.period[(i - ps.preperiod.size()) % ps.period.size()]);
      }
    }
  }
}

std::span<const Letter> PrefixBuffer::ensure(std::size_t len) {
  extend_to(len);
  return view();
}

std::span<const Letter> PrefixBuffer::require(std::size_t len) {
  extend_to(len);
  if (letters_.size() < len) {
    if (exhausted_) {
      throw NonExpandingError("word is finite with length " +
                              std::to_string(letters_.size()));
    }
    throw CapExceededError("requested prefix length " + std::to_string(len) +
                           " exceeds cap " + std::to_string(cap_));
  }
  return view();
}

}  // namespace wordcomp
