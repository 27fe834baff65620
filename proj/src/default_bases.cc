// Copyright 2026 The pampo Authors.
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

// Shipped pattern bases for Portuguese text.

#include <array>
#include <string_view>

#include "pampo/pattern_bases.h"

namespace pampo {
namespace {

// Titles, offices and kinship terms that may open an entity
// ("ministro Miguel Relvas"). "raínha" is kept as spelled in the source
// list; "rainha" is added alongside it.
constexpr std::array<std::string_view, 61> kTitleTriggers = {
    "grão-mestre", "papa",       "duque",      "duquesa",    "conde",
    "condessa",    "visconde",   "viscondessa", "rei",       "raínha",
    "príncipe",    "princesa",   "marquês",    "marquesa",   "barão",
    "baronesa",    "bispo",      "presidente", "secretário", "secretária",
    "ministro",    "ministra",   "primeiro",   "primeira",   "deputado",
    "deputada",    "general",    "tenente",    "capitão",    "capitã",
    "sargento",    "governador", "governadora", "diretor",   "director",
    "diretora",    "directora",  "ex",         "filho",      "filha",
    "irmão",       "irmã",       "pai",        "mãe",        "tio",
    "tia",         "padrinho",   "madrinha",   "sobrinho",   "sobrinha",
    "afilhado",    "afilhada",   "avó",        "avô",        "neto",
    "neta",        "enteado",    "enteada",    "padrasto",   "madrasta",
    "rainha"};

// Capitalized words that are not entities on their own.
constexpr std::array<std::string_view, 151> kPruningTerms = {
    "Aproveitamento", "Cuidado", "Decerto", "Desta", "Desenvolvimento",
    "Lançamento", "Levantamento", "Muitos", "Muitas", "Nessa", "Nesse",
    "Nessas", "Nesses", "Nestes", "Neste", "Nesta", "Nestas", "Noutro",
    "Outros", "Outro", "Outra", "Outras", "Onde", "Poucos", "Poucas",
    "Perante", "Pela", "Recém", "Tal", "Vários", "Várias", "Vós", "Aceite",
    "Comprometo", "Cabe", "Coloca", "Conhecemos", "Casado", "Considerava",
    "Desejo", "Devíamos", "Escolhiam", "Executa", "Faça", "Fica",
    "Interrompidas", "Indicar", "Incluído", "Leva", "Morrer", "Ouvistes",
    "Prestaste", "Praticou", "Pressiona", "Pensa", "Poder", "Podes",
    "Revolta", "Sabe", "Ser", "Ter", "Toque", "Toma", "Trata", "Vens",
    "Verificou", "Viver", "Vivemos", "Venho", "Reação", "Sessão",
    "Testamento", "Tolerância", "Término", "Vitória", "Visita", "Harmonia",
    "Iniciado", "Instalação", "Ibidem", "Inventariação", "Irregularidades",
    "Internet", "Lda", "Manutenção", "Nomeado", "Obediência", "Petição",
    "Passaporte", "Proposta", "Programa", "Proibição", "Paz", "Publicação",
    "Questionário", "Quadro", "Relatório", "Redução", "Reorganização",
    "Revolução", "República", "Reequilíbrio", "Anexo", "Abertura",
    "Atestado", "Ata", "Adoção", "Atualização", "Às", "Á", "Capa", "Convite",
    "Compromisso", "Condecoração", "Convocatória", "Cartão", "Causa",
    "Comunicação", "Corrupção", "Convergência", "Decreto", "Ditadura",
    "Democracia", "Democrata", "Estrutura", "Ficha", "Fax", "Fixação",
    "Futuro", "Gabinete", "Glória", "Janeiro", "Fevereiro", "Março",
    "Abril", "Maio", "Junho", "Julho", "Agosto", "Setembro", "Outubro",
    "Novembro", "Dezembro", "Diário", "Semanal", "Mensal", "Minutos",
    "Meses", "Ano", "Anos", "Hoje"};

// Snowball Portuguese stopword list (the list distributed with R's tm).
constexpr std::array<std::string_view, 203> kStopwords = {
    "de", "a", "o", "que", "e", "do", "da", "em", "um", "para", "com", "não",
    "uma", "os", "no", "se", "na", "por", "mais", "as", "dos", "como", "mas",
    "ao", "ele", "das", "à", "seu", "sua", "ou", "quando", "muito", "nos",
    "já", "eu", "também", "só", "pelo", "pela", "até", "isso", "ela",
    "entre", "depois", "sem", "mesmo", "aos", "seus", "quem", "nas", "me",
    "esse", "eles", "você", "essa", "num", "nem", "suas", "meu", "às",
    "minha", "numa", "pelos", "elas", "qual", "nós", "lhe", "deles", "essas",
    "esses", "pelas", "este", "dele", "tu", "te", "vocês", "vos", "lhes",
    "meus", "minhas", "teu", "tua", "teus", "tuas", "nosso", "nossa",
    "nossos", "nossas", "dela", "delas", "esta", "estes", "estas", "aquele",
    "aquela", "aqueles", "aquelas", "isto", "aquilo", "estou", "está",
    "estamos", "estão", "estive", "esteve", "estivemos", "estiveram",
    "estava", "estávamos", "estavam", "estivera", "estivéramos", "esteja",
    "estejamos", "estejam", "estivesse", "estivéssemos", "estivessem",
    "estiver", "estivermos", "estiverem", "hei", "há", "havemos", "hão",
    "houve", "houvemos", "houveram", "houvera", "houvéramos", "haja",
    "hajamos", "hajam", "houvesse", "houvéssemos", "houvessem", "houver",
    "houvermos", "houverem", "houverei", "houverá", "houveremos",
    "houverão", "houveria", "houveríamos", "houveriam", "sou", "somos",
    "são", "era", "éramos", "eram", "fui", "foi", "fomos", "foram", "fora",
    "fôramos", "seja", "sejamos", "sejam", "fosse", "fôssemos", "fossem",
    "for", "formos", "forem", "serei", "será", "seremos", "serão", "seria",
    "seríamos", "seriam", "tenho", "tem", "temos", "tém", "tinha",
    "tínhamos", "tinham", "tive", "teve", "tivemos", "tiveram", "tivera",
    "tivéramos", "tenha", "tenhamos", "tenham", "tivesse", "tivéssemos",
    "tivessem", "tiver", "tivermos", "tiverem", "terei", "terá", "teremos",
    "terão", "teria", "teríamos", "teriam"};

PatternBases build_defaults() {
  PatternBases b;
  for (auto src : {"TRIGGER? CONNECTOR? CAP (CONNECTOR{1,2} CAP | CAP)*",
                   "TRIGGER CONNECTOR? CAP+", "CAP"}) {
    b.tpb.push_back(TermPattern::parse(src));
  }
  for (auto t : kTitleTriggers) b.triggers.add(t);
  for (auto c : {"de", "da", "do", "das", "dos", "e", "d'"}) {
    b.connectors.add(c);
  }
  // The second tag of the two-tag entries is lookahead: only the leading
  // adverb is removed so the proper noun after it survives. Articles are
  // clipped like determiners ("O COB" -> "COB").
  using T = PosTag;
  b.cpb = {
      {{T::kPronDet}, 1},
      {{T::kAdv, T::kAdv}, 1},
      {{T::kAdv, T::kProp}, 1},
      {{T::kAdv, T::kAdj}, 1},
      {{T::kAdv, T::kVerbFinite}, 1},
      {{T::kArt}, 1},
  };
  b.ppb = {{PruningPattern::Kind::kLacks, {T::kProp, T::kNoun}}};
  for (auto t : kPruningTerms) b.tppb.add(t);
  for (auto t : kStopwords) b.tppb.add(t);
  return b;
}

}  // namespace

const PatternBases &default_bases() {
  static const PatternBases kDefaults = build_defaults();
  return kDefaults;
}

const std::string &default_bases_text() {
  static const std::string kText =
      "# Default pampo pattern bases.\n" + serialize(default_bases());
  return kText;
}

std::span<const std::string_view> title_triggers() { return kTitleTriggers; }
std::span<const std::string_view> pruning_terms() { return kPruningTerms; }
std::span<const std::string_view> portuguese_stopwords() { return kStopwords; }

}  // namespace pampo
