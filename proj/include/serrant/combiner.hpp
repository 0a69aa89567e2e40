#pragma once

// Final typing: start from the base type and swap in the SErCl type where the
// base category is uninformative or lumps distinct phenomena together.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serrant/alignment.hpp"
#include "serrant/base_classifier.hpp"
#include "serrant/sercl.hpp"
#include "serrant/text.hpp"
#include "serrant/ud.hpp"

namespace serrant {

enum class EditOp { Replace, Missing, Unnecessary };

inline char op_letter(EditOp op) {
  switch (op) {
    case EditOp::Missing: return 'M';
    case EditOp::Unnecessary: return 'U';
    default: return 'R';
  }
}

inline EditOp op_of(const Edit& e) {
  if (e.is_insertion()) return EditOp::Missing;
  if (e.is_deletion()) return EditOp::Unnecessary;
  return EditOp::Replace;
}

struct HeadInfo {
  Upos upos = Upos::X;
  std::string lemma;
  std::string form;
  friend bool operator==(const HeadInfo&, const HeadInfo&) = default;
};

struct EditContext {
  EditOp op = EditOp::Replace;
  bool sentence_initial = false;
  bool multi_word = false;
  std::vector<std::string> src_lemmas;
  std::vector<std::string> trg_lemmas;
  std::vector<std::string> src_forms;
  std::vector<std::string> trg_forms;
  std::optional<HeadInfo> src_head;
  std::optional<HeadInfo> trg_head;

  std::optional<Upos> src_upos() const { return src_head ? std::optional(src_head->upos) : std::nullopt; }
  std::optional<Upos> trg_upos() const { return trg_head ? std::optional(trg_head->upos) : std::nullopt; }
};

inline EditContext make_context(const Edit& edit, const AnnotatedSentence* src, const AnnotatedSentence* trg) {
  EditContext ctx;
  ctx.op = op_of(edit);
  ctx.sentence_initial = edit.span.start == 0;
  ctx.multi_word = edit.src_tokens.size() > 1 || edit.span.correction.size() > 1;
  auto fill = [](const AnnotatedSentence* s, std::size_t begin, std::size_t end, std::vector<std::string>& lemmas,
                 std::vector<std::string>& forms, std::optional<HeadInfo>& head, const char* side) {
    if (begin == end) return;
    if (s == nullptr || end > s->size()) {
      throw AnnotationMissingError(std::string("no usable annotation for the ") + side + " span");
    }
    for (std::size_t i = begin; i < end; ++i) {
      lemmas.push_back((*s)[i].lemma);
      forms.push_back((*s)[i].form);
    }
    const Token& h = span_head(*s, begin, end);
    head = HeadInfo{h.upos, h.lemma, h.form};
  };
  fill(src, edit.start(), edit.end(), ctx.src_lemmas, ctx.src_forms, ctx.src_head, "source");
  fill(trg, edit.trg_start, edit.trg_end(), ctx.trg_lemmas, ctx.trg_forms, ctx.trg_head, "corrected");
  return ctx;
}

enum class Suffix { WC, MW };

inline std::string_view to_string(Suffix s) { return s == Suffix::WC ? "WC" : "MW"; }

struct TypeBody {
  enum class Kind { Named, Tag, Sercl };
  Kind kind = Kind::Named;
  std::string name;  // Named and Tag
  SerclType sercl;   // Sercl

  static TypeBody named(std::string n) { return {Kind::Named, std::move(n), {}}; }
  static TypeBody tag(std::string_view n) { return {Kind::Tag, std::string(n), {}}; }
  static TypeBody of(SerclType t) { return {Kind::Sercl, {}, std::move(t)}; }

  // A single bare tag: POS label or collapsed SErCl type.
  bool single_tag() const { return kind == Kind::Tag || (kind == Kind::Sercl && sercl.collapsed); }
  bool bare_tags() const { return kind == Kind::Tag || (kind == Kind::Sercl && !sercl.qualified()); }

  friend bool operator==(const TypeBody&, const TypeBody&) = default;
};

struct SerrantType {
  EditOp op = EditOp::Replace;
  TypeBody body;
  std::vector<Suffix> suffixes;

  bool has(Suffix s) const { return std::find(suffixes.begin(), suffixes.end(), s) != suffixes.end(); }
  friend bool operator==(const SerrantType&, const SerrantType&) = default;
};

// One-sided SErCl bodies drop the "None" side; the M/U prefix carries it.
inline std::string render(const TypeBody& body, std::string_view arrow = kAsciiArrow) {
  switch (body.kind) {
    case TypeBody::Kind::Named:
    case TypeBody::Kind::Tag: return body.name;
    case TypeBody::Kind::Sercl:
      if (!body.sercl.left.tag) return render(body.sercl.right);
      if (!body.sercl.right.tag) return render(body.sercl.left);
      return render(body.sercl, arrow);
  }
  return body.name;
}

inline std::string render(const SerrantType& t, std::string_view arrow = kAsciiArrow) {
  std::string out(1, op_letter(t.op));
  out += ':';
  out += render(t.body, arrow);
  for (Suffix s : t.suffixes) {
    out += ':';
    out += to_string(s);
  }
  return out;
}

inline constexpr std::array<std::string_view, 9> kModalVerbs = {"can",    "could", "may",   "might", "shall",
                                                                  "should", "will",  "would", "must"};

inline bool is_modal(std::string_view form) {
  const std::string lower = text::to_lower(form);
  return std::find(kModalVerbs.begin(), kModalVerbs.end(), lower) != kModalVerbs.end();
}

// Tags whose presence makes an OTHER or MORPH edit unreliable.
inline bool is_unreliable_tag(std::optional<Upos> tag) {
  if (!tag) return false;
  switch (*tag) {
    case Upos::INTJ:
    case Upos::NUM:
    case Upos::SYM:
    case Upos::X:
    case Upos::PUNCT: return true;
    default: return false;
  }
}

namespace detail {

inline TypeBody combine_other(const SerclType& sercl, const EditContext& ctx) {
  const auto s = ctx.src_upos();
  const auto t = ctx.trg_upos();
  if (is_unreliable_tag(s) || is_unreliable_tag(t)) return TypeBody::named("Other");
  const bool sp = s == Upos::PROPN;
  const bool tp = t == Upos::PROPN;
  if (sp && tp) return TypeBody::tag(title_case(Upos::PROPN));
  if (sp || tp) return TypeBody::named("Other");
  return TypeBody::of(sercl);
}

inline TypeBody combine_morph(const SerclType& sercl, const EditContext& ctx) {
  const auto s = ctx.src_upos();
  const auto t = ctx.trg_upos();
  if (is_unreliable_tag(s) || is_unreliable_tag(t)) return TypeBody::named("Other");
  const bool sp = s == Upos::PROPN;
  const bool tp = t == Upos::PROPN;
  if (sp != tp) {
    const auto other = sp ? t : s;
    return other == Upos::ADJ ? TypeBody::of(sercl) : TypeBody::named("Other");
  }
  return TypeBody::of(sercl);
}

inline TypeBody combine_orth(const SerclType& sercl, const EditContext& ctx) {
  const auto s = ctx.src_upos();
  if (!ctx.sentence_initial && ctx.trg_upos() == Upos::PROPN && s && *s != Upos::PROPN) {
    return TypeBody::of(sercl);
  }
  return TypeBody::named("Orth");
}

inline TypeBody combine_verb(const SerclType& sercl, const EditContext& ctx) {
  const bool sa = ctx.src_upos() == Upos::AUX;
  const bool ta = ctx.trg_upos() == Upos::AUX;
  if (ctx.op == EditOp::Replace) {
    if (sa && ta) return TypeBody::tag(title_case(Upos::AUX));
    if (sa != ta) return TypeBody::of(sercl);
  } else if (sa || ta) {
    return TypeBody::tag(title_case(Upos::AUX));
  }
  return TypeBody::tag(surface_pos(Upos::VERB));
}

inline TypeBody combine_pron_det(const BaseType& base, const SerclType& sercl, const EditContext& ctx) {
  const auto s = ctx.src_upos();
  const auto t = ctx.trg_upos();
  if ((s == Upos::PRON && t == Upos::DET) || (s == Upos::DET && t == Upos::PRON)) return TypeBody::of(sercl);
  return TypeBody::tag(surface_pos(*base.pos));
}

inline bool tense_auxiliary(const std::optional<HeadInfo>& h) {
  if (!h) return false;
  const std::string lemma = text::to_lower(h->lemma);
  return lemma == "be" || lemma == "have" || text::to_lower(h->form) == "will";
}

inline TypeBody combine_tense(const SerclType& sercl, const EditContext& ctx) {
  if (tense_auxiliary(ctx.src_head) && tense_auxiliary(ctx.trg_head)) return TypeBody::named("Verb:Tense");
  if (ctx.src_head && ctx.trg_head && is_modal(ctx.src_head->form) && is_modal(ctx.trg_head->form)) {
    return TypeBody::named("Modal");
  }
  return TypeBody::of(sercl);
}

inline bool head_lemmas_differ(const EditContext& ctx) {
  return ctx.src_head && ctx.trg_head && text::to_lower(ctx.src_head->lemma) != text::to_lower(ctx.trg_head->lemma);
}

}  // namespace detail

inline SerrantType combine(const BaseType& base, const SerclType& sercl, const EditContext& ctx) {
  SerrantType out;
  out.op = ctx.op;
  switch (base.category) {
    case BaseCategory::Other: out.body = detail::combine_other(sercl, ctx); break;
    case BaseCategory::Morph: out.body = detail::combine_morph(sercl, ctx); break;
    case BaseCategory::Orth: out.body = detail::combine_orth(sercl, ctx); break;
    case BaseCategory::VerbForm:
      out.body = ctx.src_upos() == Upos::NOUN && ctx.trg_upos() == Upos::VERB
                     ? TypeBody::of(SerclType::pair(Upos::NOUN, Upos::VERB))
                     : TypeBody::named(to_string(base));
      break;
    case BaseCategory::VerbTense: out.body = detail::combine_tense(sercl, ctx); break;
    case BaseCategory::Pos:
      if (base.pos == Upos::VERB) {
        out.body = detail::combine_verb(sercl, ctx);
      } else if (base.pos == Upos::PRON || base.pos == Upos::DET) {
        out.body = detail::combine_pron_det(base, sercl, ctx);
      } else {
        out.body = TypeBody::tag(surface_pos(base.pos.value_or(Upos::X)));
      }
      break;
    default: out.body = TypeBody::named(to_string(base)); break;
  }

  if (ctx.op == EditOp::Replace && out.body.single_tag() && detail::head_lemmas_differ(ctx)) {
    out.suffixes.push_back(Suffix::WC);
  }
  if (ctx.multi_word && out.body.bare_tags()) out.suffixes.push_back(Suffix::MW);
  return out;
}

}  // namespace serrant
