// Copyright 2026 The eduseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eduseg/synthetic.hpp"

#include <array>
#include <ostream>
#include <random>
#include <string_view>

#include "eduseg/errors.hpp"

namespace eduseg {
namespace {

struct Word {
  std::string_view form;
  std::string_view lemma;
};

constexpr std::array<std::string_view, 12> kDeterminers = {
    "le", "la", "les", "un", "une", "des", "ce", "cette", "ces", "son", "sa", "leur"};

constexpr std::array<std::string_view, 60> kNouns = {
    "pièces", "amateur", "collection", "musée", "tableau", "ville", "maire", "projet",
    "conseil", "travaux", "route", "école", "enfant", "famille", "marché", "prix",
    "entreprise", "usine", "ouvrier", "syndicat", "accord", "gouvernement", "loi", "député",
    "région", "village", "église", "château", "rivière", "pont", "gare", "train",
    "festival", "concert", "artiste", "public", "équipe", "match", "saison", "joueur",
    "club", "stade", "journal", "article", "auteur", "livre", "roman", "siècle",
    "guerre", "armée", "roi", "reine", "empire", "frontière", "langue", "habitant",
    "commune", "population", "hôpital", "médecin"};

constexpr std::array<std::string_view, 32> kAdjectives = {
    "riche", "nippon", "célèbre", "ancien", "nouveau", "grand", "petit", "important",
    "local", "national", "régional", "public", "privé", "premier", "dernier", "jeune",
    "vieux", "beau", "fragile", "précieux", "rare", "moderne", "municipal", "lointain",
    "connues", "écoulables", "fameux", "discret", "fort", "rapide", "calme", "entier"};

constexpr std::array<std::string_view, 20> kAdverbs = {
    "mondialement", "difficilement", "rapidement", "souvent", "toujours", "rarement",
    "récemment", "longuement", "largement", "fortement", "vivement", "lentement",
    "facilement", "déjà", "encore", "très", "assez", "plutôt", "presque", "vraiment"};

constexpr std::array<Word, 30> kVerbs = {{
    {"vend", "vendre"}, {"achète", "acheter"}, {"construit", "construire"},
    {"ouvre", "ouvrir"}, {"ferme", "fermer"}, {"dirige", "diriger"},
    {"présente", "présenter"}, {"organise", "organiser"}, {"accueille", "accueillir"},
    {"visite", "visiter"}, {"quitte", "quitter"}, {"rejoint", "rejoindre"},
    {"finance", "financer"}, {"publie", "publier"}, {"écrit", "écrire"},
    {"gagne", "gagner"}, {"perd", "perdre"}, {"traverse", "traverser"},
    {"protège", "protéger"}, {"remplace", "remplacer"}, {"prépare", "préparer"},
    {"soutient", "soutenir"}, {"refuse", "refuser"}, {"découvre", "découvrir"},
    {"occupe", "occuper"}, {"domine", "dominer"}, {"menace", "menacer"},
    {"rencontre", "rencontrer"}, {"possède", "posséder"}, {"attend", "attendre"}}};

constexpr std::array<Word, 16> kParticiples = {{
    {"repérées", "repérer"}, {"vendu", "vendre"}, {"construit", "construire"},
    {"ouvert", "ouvrir"}, {"fermé", "fermer"}, {"présenté", "présenter"},
    {"organisé", "organiser"}, {"visité", "visiter"}, {"publié", "publier"},
    {"gagné", "gagner"}, {"perdu", "perdre"}, {"remplacé", "remplacer"},
    {"découvert", "découvrir"}, {"occupé", "occuper"}, {"rencontré", "rencontrer"},
    {"attendu", "attendre"}}};

constexpr std::array<Word, 6> kAuxiliaries = {{{"a", "avoir"}, {"avait", "avoir"},
                                               {"ont", "avoir"}, {"avaient", "avoir"},
                                               {"est", "être"}, {"était", "être"}}};

constexpr std::array<Word, 6> kSpeechVerbs = {{{"déclare", "déclarer"}, {"affirme", "affirmer"},
                                               {"annonce", "annoncer"}, {"explique", "expliquer"},
                                               {"estime", "estimer"}, {"dit", "dire"}}};

constexpr std::array<std::string_view, 10> kPrepositions = {
    "à", "de", "dans", "pour", "avec", "sur", "chez", "par", "vers", "contre"};

constexpr std::array<std::string_view, 5> kPronouns = {"il", "elle", "ils", "elles", "on"};

constexpr std::array<std::string_view, 4> kInterjections = {"bref", "certes", "voilà", "soit"};

// Connectives; several span two tokens.
constexpr std::array<std::array<std::string_view, 2>, 14> kConnectives = {{
    {"donc", ""}, {"mais", ""}, {"puis", ""}, {"ensuite", ""}, {"alors", ""},
    {"car", ""}, {"cependant", ""}, {"pourtant", ""}, {"néanmoins", ""},
    {"par", "ailleurs"}, {"en", "effet"}, {"de", "plus"}, {"par", "conséquent"},
    {"en", "outre"}}};

template <typename T, std::size_t N>
const T& pick(std::mt19937_64& rng, const std::array<T, N>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

ChunkElement chunk(const char* tag, ChunkPosition position) { return {tag, position}; }

class SentenceBuilder {
 public:
  SentenceBuilder(std::mt19937_64& rng, const SyntheticConfig& config) : rng_(rng), config_(config) {}

  Sentence build(std::size_t id) {
    const std::size_t clauses = std::uniform_int_distribution<std::size_t>(1, 4)(rng_);
    std::optional<std::size_t> previous_verb;
    bool pending_que = false;
    for (std::size_t c = 0; c < clauses; ++c) {
      const bool last = c + 1 == clauses;
      std::vector<std::size_t> attach;  // tokens headed by this clause's verb

      if (c > 0 && !pending_que && chance(config_.singleton_prob)) {
        const std::size_t t = add(pick(rng_, kInterjections), "ADV", "ADV", {chunk("ADVP", ChunkPosition::Singleton)});
        tokens_[t].deprel = "mod";
        tokens_[t].gold = BoundaryLabel::BeginEnd;
        attach.push_back(t);
      }

      const std::size_t clause_start = tokens_.size();
      bool cued = false;
      if (pending_que) {
        const std::size_t t = add("que", "CS", "C", {});
        tokens_[t].deprel = "sub";
        attach.push_back(t);
        cued = true;
      } else if (c > 0 && chance(config_.marker_cue_prob)) {
        const auto& connective = pick(rng_, kConnectives);
        const std::size_t t = add(connective[0], "ADV", "C", {chunk("ADVP", connective[1].empty() ? ChunkPosition::Singleton : ChunkPosition::Begin)});
        tokens_[t].deprel = "mod";
        attach.push_back(t);
        if (!connective[1].empty()) {
          const std::size_t u = add(connective[1], "ADV", "C", {chunk("ADVP", ChunkPosition::End)});
          link(u, t, "dep");
        }
        cued = true;
      }
      pending_que = false;

      // Subject.
      std::size_t subject = 0;
      if (chance(0.25)) {
        subject = add(pick(rng_, kPronouns), "CLS", "CL", {chunk("NP", ChunkPosition::Singleton)});
      } else {
        const bool glued = c > 0 && !cued && clause_start == tokens_.size() &&
                           tokens_.back().form == "," && chance(config_.chunk_noise_prob);
        if (glued) tokens_.back().chunk_path = {chunk("NP", ChunkPosition::Begin)};
        subject = noun_phrase(glued, {});
        if (chance(0.25)) prepositional_phrase(subject);
      }
      tokens_[subject].deprel = "suj";
      attach.push_back(subject);

      if (tokens_[subject].pos == "NC" && chance(config_.nesting_prob)) {
        link(add(",", "PONCT", "PONCT", {}), subject, "ponct");
        nested_segment(subject, chance(0.6));
        if (chance(0.3)) nested_segment(subject, true);
      }

      // Verb group.
      std::size_t verb = 0;
      const bool speech = !last && chance(0.12);
      if (speech) {
        const Word& w = pick(rng_, kSpeechVerbs);
        verb = add(w.form, w.lemma, "V", "V", {chunk("VP", ChunkPosition::Singleton)});
      } else if (chance(0.5)) {
        const Word& aux = pick(rng_, kAuxiliaries);
        const std::size_t a = add(aux.form, aux.lemma, "V", "V", {chunk("VP", ChunkPosition::Begin)});
        std::optional<std::size_t> adverb;
        if (chance(0.2)) adverb = add(pick(rng_, kAdverbs), "ADV", "ADV", {chunk("VP", ChunkPosition::Inside)});
        const Word& w = pick(rng_, kParticiples);
        verb = add(w.form, w.lemma, "VPP", "V", {chunk("VP", ChunkPosition::End)});
        link(a, verb, "aux");
        if (adverb) link(*adverb, verb, "mod");
      } else {
        const Word& w = pick(rng_, kVerbs);
        verb = add(w.form, w.lemma, "V", "V", {chunk("VP", ChunkPosition::Singleton)});
      }
      if (previous_verb) {
        link(verb, *previous_verb, "coord");
      }
      for (std::size_t t : attach) tokens_[t].head = verb;

      std::size_t clause_end = verb;
      if (speech) {
        pending_que = true;
      } else {
        if (chance(0.8)) {
          if (chance(0.5)) {
            link(noun_phrase(false, {}), verb, "obj");
          } else {
            prepositional_phrase(verb);
          }
        }
        if (chance(0.4)) prepositional_phrase(verb);
        if (chance(0.15)) {
          link(add(pick(rng_, kAdverbs), "ADV", "ADV", {chunk("ADVP", ChunkPosition::Singleton)}), verb, "mod");
        }
        clause_end = add(last ? "." : ",", "PONCT", "PONCT", {});
        link(clause_end, verb, "ponct");
      }
      tokens_[clause_start].gold = BoundaryLabel::Begin;
      tokens_[clause_end].gold = BoundaryLabel::End;
      previous_verb = verb;
    }

    Sentence sentence;
    sentence.id = id;
    sentence.tokens = std::move(tokens_);
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      Token& token = sentence.tokens[i];
      token.index = i;
      if (!token.gold) token.gold = BoundaryLabel::Inside;
    }
    tokens_.clear();
    return sentence;
  }

 private:
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::size_t add(std::string_view form, std::string_view lemma, const char* pos,
                  const char* category, std::vector<ChunkElement> chunks) {
    Token token;
    token.form = std::string(form);
    token.lemma = std::string(lemma);
    token.pos = pos;
    token.category = category;
    token.chunk_path = std::move(chunks);
    tokens_.push_back(std::move(token));
    return tokens_.size() - 1;
  }

  std::size_t add(std::string_view form, const char* pos, const char* category,
                  std::vector<ChunkElement> chunks) {
    return add(form, form, pos, category, std::move(chunks));
  }

  void link(std::size_t dependent, std::size_t head, const char* relation) {
    tokens_[dependent].head = head;
    tokens_[dependent].deprel = relation;
  }

  // DET (ADJ) NOUN (ADJ), optionally embedded in an outer chunk given by
  // `outer` (positions of the outer chunk for first/middle/last tokens).
  // With `glued`, the determiner continues a chunk opened by the previous
  // token. Returns the noun.
  std::size_t noun_phrase(bool glued, std::optional<const char*> outer) {
    const bool pre = chance(0.3);
    const bool post = chance(0.6);
    const auto path = [&](ChunkPosition inner, bool outer_last) {
      std::vector<ChunkElement> chunks{chunk("NP", inner)};
      if (outer) chunks.push_back(chunk(*outer, outer_last ? ChunkPosition::End : ChunkPosition::Inside));
      return chunks;
    };
    const std::size_t det = add(pick(rng_, kDeterminers), "DET", "D",
                                path(glued ? ChunkPosition::Inside : ChunkPosition::Begin, false));
    std::optional<std::size_t> before;
    if (pre) before = add(pick(rng_, kAdjectives), "ADJ", "A", path(ChunkPosition::Inside, false));
    const std::size_t noun = add(pick(rng_, kNouns), "NC", "N",
                                 path(post ? ChunkPosition::Inside : ChunkPosition::End, !post));
    if (post) link(add(pick(rng_, kAdjectives), "ADJ", "A", path(ChunkPosition::End, true)), noun, "mod");
    link(det, noun, "det");
    if (before) link(*before, noun, "mod");
    return noun;
  }

  void prepositional_phrase(std::size_t head) {
    const std::size_t prep = add(pick(rng_, kPrepositions), "P", "P", {chunk("PP", ChunkPosition::Begin)});
    link(prep, head, "mod");
    link(noun_phrase(false, "PP"), prep, "obj.p");
  }

  // Appositive (ADV ADJ ,) or relative (qui V DET N ,) segment attached to
  // `noun`.
  void nested_segment(std::size_t noun, bool appositive) {
    std::size_t first = 0, anchor = 0;
    if (appositive) {
      first = add(pick(rng_, kAdverbs), "ADV", "ADV", {chunk("ADVP", ChunkPosition::Singleton)});
      anchor = add(pick(rng_, kAdjectives), "ADJ", "A", {chunk("AP", ChunkPosition::Singleton)});
      link(first, anchor, "mod");
      link(anchor, noun, "mod.app");
    } else {
      first = add("qui", "PROREL", "PRO", {chunk("NP", ChunkPosition::Singleton)});
      const Word& w = pick(rng_, kVerbs);
      anchor = add(w.form, w.lemma, "V", "V", {chunk("VP", ChunkPosition::Singleton)});
      link(first, anchor, "suj");
      link(anchor, noun, "mod.rel");
      link(noun_phrase(false, {}), anchor, "obj");
    }
    const std::size_t comma = add(",", "PONCT", "PONCT", {});
    link(comma, anchor, "ponct");
    tokens_[first].gold = BoundaryLabel::Begin;
    tokens_[comma].gold = BoundaryLabel::End;
  }

  std::mt19937_64& rng_;
  const SyntheticConfig& config_;
  std::vector<Token> tokens_;
};

}  // namespace

void SyntheticConfig::validate() const {
  for (double p : {nesting_prob, marker_cue_prob, chunk_noise_prob, singleton_prob}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ContractError("generator probabilities must lie in [0,1]");
  }
  if (documents == 0 || sentences_per_document == 0) {
    throw ContractError("generator needs at least one document and one sentence per document");
  }
}

Corpus generate_synthetic(const SyntheticConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  SentenceBuilder builder(rng, config);
  Corpus docs;
  for (std::size_t d = 0; d < config.documents; ++d) {
    char id[32];
    std::snprintf(id, sizeof(id), "synth%03zu", d);
    Document doc{id, {}};
    for (std::size_t s = 0; s < config.sentences_per_document; ++s) {
      doc.sentences.push_back(builder.build(s));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

Lexicons synthetic_lexicons() {
  Lexicons lexicons;
  for (const auto& connective : kConnectives) {
    std::vector<std::string> marker{std::string(connective[0])};
    if (!connective[1].empty()) marker.emplace_back(connective[1]);
    lexicons.discourse_markers.push_back(std::move(marker));
  }
  for (const auto& verb : kSpeechVerbs) lexicons.speech_verbs.emplace(verb.lemma);
  return lexicons;
}

void write_marker_lexicon(std::ostream& out, const Lexicons& lexicons) {
  out << "# discourse markers, one per line\n";
  for (const auto& marker : lexicons.discourse_markers) {
    for (std::size_t k = 0; k < marker.size(); ++k) out << (k > 0 ? " " : "") << marker[k];
    out << '\n';
  }
}

void write_verb_lexicon(std::ostream& out, const Lexicons& lexicons) {
  out << "# indirect speech report verbs, one lemma per line\n";
  for (const auto& verb : lexicons.speech_verbs) out << verb << '\n';
}

}  // namespace eduseg
