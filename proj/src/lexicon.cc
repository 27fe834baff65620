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

// Lexicons of the builtin tagger. Entries are grouped by tag as
// space-separated lowercase words.

#include "lexicon.h"

#include <string_view>

#include "pampo/pattern_bases.h"
#include "pampo/unicode.h"

namespace pampo {
namespace lexicon {
namespace {

struct Group {
  PosTag tag;
  std::string_view words;
};

// Function words. These never become proper nouns, whatever their case.
constexpr Group kClosedClass[] = {
    {PosTag::kArt, "o a os as um uma uns umas"},
    {PosTag::kPrep,
     "de em para com por sem sob sobre entre até após desde contra perante "
     "durante mediante ante trás conforme exceto salvo via ao aos à às do da "
     "dos das no na nos nas pelo pela pelos pelas num numa nuns numas dum "
     "duma duns dumas neste nesta nestes nestas nesse nessa nesses nessas "
     "naquele naquela naqueles naquelas deste desta destes destas desse "
     "dessa desses dessas daquele daquela daqueles daquelas dele dela deles "
     "delas nele nela neles nelas noutro noutra noutros noutras pra pro"},
    {PosTag::kConj,
     "e ou mas que se porque pois porém contudo todavia embora nem enquanto "
     "portanto caso como conquanto senão"},
    {PosTag::kPronPers,
     "eu tu ele ela nós vós eles elas me te lhe lhes vos mim ti si comigo "
     "contigo consigo conosco connosco convosco você vocês"},
    {PosTag::kPronDet,
     "este esta estes estas esse essa esses essas aquele aquela aqueles "
     "aquelas isto isso aquilo algum alguma alguns algumas nenhum nenhuma "
     "nenhuns nenhumas todo toda todos todas outro outra outros outras "
     "muitos muitas poucos poucas vários várias cada qualquer quaisquer tal "
     "tais meu minha meus minhas teu tua teus tuas seu sua seus suas nosso "
     "nossa nossos nossas vosso vossa vossos vossas mesmo mesma mesmos "
     "mesmas próprio própria próprios próprias tanta tantos tantas quanta "
     "quantos quantas qual quais cujo cuja cujos cujas certos certas demais "
     "ambos ambas quem algo alguém ninguém tudo nada outrem"},
    {PosTag::kAdv,
     "já não sim muito mais menos bem mal sempre nunca jamais também ainda "
     "hoje ontem amanhã aqui ali lá cá aí agora depois antes logo assim "
     "talvez só apenas quase tão tanto quanto onde aonde quando sequer idem "
     "ibidem cedo tarde além aquém acima abaixo dentro fora perto longe "
     "entretanto então outrora ora depressa afinal inclusive decerto "
     "porventura atualmente actualmente finalmente recentemente"},
    {PosTag::kNum,
     "dois duas três quatro cinco seis sete oito nove dez onze doze treze "
     "catorze quinze vinte trinta quarenta cinquenta cem cento duzentos "
     "trezentos mil milhão milhões bilião"},
};

// Content words. Title and kinship triggers are added as nouns; ordinal
// triggers are adjectives.
constexpr Group kOpenClass[] = {
    {PosTag::kVerbFinite,
     "é foi são era eram está estão estava estavam estou estamos esteve "
     "tem têm tinha tinham teve tiveram há havia houve vai vão ia iam vem "
     "vêm veio vieram pode podem podia podiam pôde puderam deve devem devia "
     "deviam disse disseram diz dizem afirmou afirmaram declarou declararam "
     "referiu referiram explicou explicaram acrescentou sublinhou salientou "
     "considerou considera consideram defendeu defende defendem anunciou "
     "anunciaram revelou revelaram indicou indicaram adiantou garantiu "
     "garantiram assegurou lembrou frisou criticou acusou negou admitiu "
     "reconheceu confirmou informou divulgou apresentou apresentaram decidiu "
     "decidiram aprovou aprovaram recebeu receberam realizou realiza "
     "realizam começou começa começam terminou termina continua continuam "
     "fica ficam ficou ficaram passou passa passam chegou chega chegam "
     "entrou saiu saem ganhou ganha venceu vence perdeu perde jogou joga "
     "marcou marca conquistou levará terá será serão estará haverá poderá "
     "deverá acontece aconteceu acontecerá ocorre ocorreu aguarda aguardam "
     "espera esperam quer querem queria sabe sabem sabia conhece conhecemos "
     "conheceu fez fazem faz fizeram tornou torna tornam trata tratam "
     "existe existem parece parecem mostra mostrou permite permitiu exige "
     "exigiu inclui incluiu precisa precisam tenho temos sou somos fui "
     "fomos estive estivemos venho vimos vou vamos posso podemos devo "
     "devemos quero queremos acho achamos penso pensamos creio acredito "
     "acreditamos sei sabemos digo dizemos faço fazemos estejam seja sejam "
     "fosse fossem tenha tenham houvesse vale valem resta restam cabe "
     "importa interessa convém falta faltam segue seguem seguiu"},
    {PosTag::kVerbInfinitive,
     "ser ter estar haver fazer dizer ir vir poder dever querer saber ver "
     "dar ficar passar chegar levar deixar tornar falar pensar viver "
     "morrer trabalhar jogar ganhar perder vencer conseguir começar acabar "
     "continuar realizar apresentar aprovar receber garantir permitir "
     "assegurar manter criar abrir fechar entrar sair voltar seguir"},
    {PosTag::kVerbParticiple,
     "sido tido estado havido feito dito ido vindo podido dado ficado "
     "passado chegado levado deixado tornado falado pensado vivido morrido "
     "nomeado eleito casado nascido morto preso detido considerado "
     "apresentado aprovado realizado recebido garantido criado aberto "
     "fechado iniciado terminado concluído incluído previsto marcado "
     "sendo tendo estando havendo fazendo dizendo indo vindo podendo "
     "ocorrendo evoluindo crescendo sendo"},
    {PosTag::kAdj,
     "novo nova novos novas grande grandes pequeno pequena pequenos "
     "pequenas bom boa bons boas mau má maus más melhor melhores pior "
     "piores maior maiores menor menores último última últimos últimas "
     "próximo próxima próximos próximas anterior anteriores seguinte "
     "seguintes atual actual atuais actuais antigo antiga antigos antigas "
     "primeiro primeira segundo segunda terceiro terceira quarto quarta "
     "quinto quinta nacional nacionais internacional internacionais "
     "português portuguesa portugueses portuguesas brasileiro brasileira "
     "brasileiros brasileiras europeu europeia europeus europeias "
     "social sociais político política políticos políticas económico "
     "económica econômico econômica público pública públicos públicas "
     "privado privada geral gerais total totais principal principais "
     "importante importantes possível possíveis necessário necessária "
     "difícil fácil forte fortes alto alta baixo baixa longo longa curto "
     "curta certo certa claro clara feliz felizes contínuo contínua "
     "efetivo efetiva efectivo efectiva técnico técnica técnicos técnicas "
     "olímpico olímpica olímpicos olímpicas qualitativo qualitativa "
     "recorde femininos femininas masculinos masculinas"},
    {PosTag::kNoun,
     "ano anos dia dias mês meses semana semanas hora horas vez vezes "
     "tempo momento época século séculos data história país países cidade "
     "cidades região regiões governo governos estado estados câmara "
     "parlamento assembleia partido partidos ministério tribunal empresa "
     "empresas banco bancos mercado mercados economia crise dinheiro euros "
     "dólares reais milhões preço preços valor valores número números "
     "total parte partes lado lados caso casos forma formas modo maneira "
     "coisa coisas facto fato problema problemas questão questões razão "
     "trabalho trabalhos projeto projecto projetos plano planos processo "
     "processos sistema sistemas política lei leis decreto acordo acordos "
     "relação relações situação condição condições decisão decisões "
     "resultado resultados objetivo objectivo objetivos medida medidas "
     "pessoa pessoas homem homens mulher mulheres criança crianças jovem "
     "jovens família famílias amigo amigos povo população grupo grupos "
     "membro membros sócio sócios líder líderes chefe chefes dirigente "
     "dirigentes responsável responsáveis representante representantes "
     "porta-voz jogador jogadores treinador equipa equipas equipe time "
     "clube clubes jogo jogos partida campeonato liga taça torneio época "
     "vitória derrota golo golos gol gols ponto pontos atleta atletas "
     "esporte esportes desporto delegação participação anúncio definição "
     "ranking semana final expectativa revezamentos remo seletiva natação "
     "tênis ténis marca trabalho planejamento planeamento execução "
     "evolução convite critérios vagas meio países recorde mundo "
     "casa casas rua ruas escola escolas universidade hospital igreja "
     "loja lojas irmandade maçonaria obediência sessão reunião reuniões "
     "encontro cerimónia cerimônia festa livro livros página páginas texto "
     "textos carta cartas notícia notícias jornal jornais imprensa "
     "televisão rádio água terra fogo ar vida morte guerra paz saúde "
     "educação cultura arte ciência justiça polícia segurança defesa "
     "crescimento desenvolvimento investimento emprego desemprego salário "
     "salários imposto impostos orçamento dívida déficit défice taxa "
     "taxas conta contas lucro lucros venda vendas compra compras produto "
     "produtos serviço serviços"},
};

std::unordered_map<std::string, PosTag> build(const Group *groups,
                                              std::size_t n) {
  std::unordered_map<std::string, PosTag> out;
  for (std::size_t g = 0; g < n; ++g) {
    std::string_view words = groups[g].words;
    std::size_t i = 0;
    while (i < words.size()) {
      while (i < words.size() && words[i] == ' ') ++i;
      std::size_t b = i;
      while (i < words.size() && words[i] != ' ') ++i;
      if (i > b) {
        // First group wins for words listed twice.
        out.emplace(unicode::nfc(words.substr(b, i - b)), groups[g].tag);
      }
    }
  }
  return out;
}

}  // namespace

const std::unordered_map<std::string, PosTag> &closed_class() {
  static const auto kLexicon =
      build(kClosedClass, std::size(kClosedClass));
  return kLexicon;
}

const std::unordered_map<std::string, PosTag> &open_class() {
  static const auto kLexicon = [] {
    auto lex = build(kOpenClass, std::size(kOpenClass));
    for (auto t : title_triggers()) lex.emplace(unicode::nfc(t), PosTag::kNoun);
    return lex;
  }();
  return kLexicon;
}

}  // namespace lexicon
}  // namespace pampo
