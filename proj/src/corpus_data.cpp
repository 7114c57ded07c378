#include "nilalg/corpus.hpp"

namespace nilalg {

namespace {

// Integer-normalized characteristic-0 reduced bases of R31 and R32 as
// printed in the reference tables, transcribed verbatim (powers written with '^').
const std::vector<CorpusEntry> kTable1 = {
    {1, "b^2-ac+a^2"},
    {2, "cb-bc+a^2"},
    {3, "c^2-ba"},
    {4, "-xb-xa+bx+ax"},
    {5, "-xc+cx-ax"},
    {6, "x^2"},
    {7, "bac-ba^2-abc+a^2b+a^3"},
    {8, "bca-ba^2-abc+a^2b"},
    {9, "-ca^2-bab+aca-a^2c-a^3"},
    {10, "cac+bab+ba^2-aca-aba+2a^2c+a^2b+a^3"},
    {11, "xa^2-cax-bxa+bax-axa-acx+a^2x"},
    {12, "-xab-cxa+3cax+bxa+2axa+2acx-3a^2x"},
    {13, "-xac+cxa-2cax-bxa-2axa+abx+2a^2x"},
    {14, "xax"},
    {15, "ba^3-abab-2aba^2+2a^2ca+a^2ba-3a^3c-a^3b-a^4"},
    {16, "-ba^2b+acab+3abab+5aba^2-5a^2ca+a^2bc-3a^2ba+6a^3c+5a^4"},
    {17, "-ba^2c-acab-abab-2aba^2+2a^2ca+a^2ba-3a^3c-2a^4"},
    {18, "baba+acab+abab+2aba^2-3a^2ca+a^2bc-a^2ba+4a^3c+3a^4"},
    {19, "babc-acab-4abab-6aba^2+7a^2ca-a^2bc+3a^2ba-7a^3c-7a^4"},
    {20, "-8bcxa+15baxa-20babx+ba^2x-5acxa+32acax+4abxa+4abcx-29abax+8a^2xa+24a^2cx+5a^2bx-31a^3x"},
    {21, "caba+4abab+4aba^2-6a^2ca+a^2bc-a^2ba+7a^3c+2a^3b+7a^4"},
    {22, "cabc-2acab-aba^2+2a^2ca+2a^2bc-2a^3c-2a^4"},
    {23, "8cabx-3baxa+12babx+19ba^2x+17acxa+8acax+12abxa+44abcx+9abax-49a^2bx-37a^3x-8caxa+baxa-4babx-9ba^2x-11acxa-4abxa-12abcx+5abax+8a^2xa-8a^2cx+11a^2bx+7a^3x"},
    {24, "a^5"},
    {25, "a^4b"},
    {26, "a^4c"},
    {27, "a^4x"},
    {28, "a^3ba"},
    {29, "a^3bc"},
    {30, "a^3bx"},
    {31, "a^3ca"},
    {32, "a^3cx"},
    {33, "a^3xa"},
    {34, "a^2ba^2"},
    {35, "a^2bab"},
    {36, "a^2bax"},
    {37, "a^2bcx"},
    {38, "a^2bxa"},
    {39, "a^2cab"},
    {40, "a^2cax"},
    {41, "a^2cxa"},
    {42, "aba^2x"},
    {43, "ababx"},
    {44, "abaxa"},
    {45, "ba^2xa"},
    {46, "babxa"},
};

const std::vector<CorpusEntry> kTable2 = {
    {1, "b^2-ac+a^2"},
    {2, "cb-bc+a^2"},
    {3, "c^2-ba"},
    {4, "xb-cx-by-ay-ax"},
    {5, "-ya-ay"},
    {6, "-yb-xa+by+ax"},
    {7, "-yc+cy-cx-by+bx-ax"},
    {8, "yx"},
    {9, "y^2-x^2"},
    {10, "bac-ba^2-abc+a^2b+a^3"},
    {11, "bca-ba^2-abc+a^2b"},
    {12, "ca^2-bab+aca-a^2c-a^3"},
    {13, "cac+bab+ba^2-aca-aba+2a^2c+a^2b+a^3"},
    {14, "-cxc+cxa-2cax+bxc-2bcy+bay-2bax-acy-aby+2a^2y-2a^2x"},
    {15, "xa^2-cxa+cax+2bcx+bay+2bax-axc-axa+2acy-acx+aby-2a^2y+2a^2x"},
    {16, "-xab-bxa+bax+2acy+abx+a^2y"},
    {17, "xac-cxa-cay+bxa-bcy+2bcx+bay-axc+acy-2acx-aby-a^2y"},
    {18, "-xay-cx^2+2bx^2+axy-2ax^2"},
    {19, "-xcx-xax-cxy+2cx^2-4bx^2-2axy+3ax^2"},
    {20, "-x^2a+ax^2"},
    {21, "-x^2c-xax-cxy+cx^2+bxy-bx^2-axy"},
    {22, "x^3"},
    {23, "x^2y"},
    {24, "ba^3-abab-2aba^2+2a^2ca+a^2ba-3a^3c-a^3b-a^4"},
    {25, "-ba^2b+acab+3abab+5aba^2-5a^2ca+a^2bc-3a^2ba+6a^3c+5a^4"},
    {26, "-ba^2c-acab-abab-2aba^2+2a^2ca+a^2ba-3a^3c-2a^4"},
    {27, "baba+acab+abab+2aba^2-3a^2ca+a^2bc-a^2ba+4a^3c+3a^4"},
    {28, "babc-acab-4abab-6aba^2+7a^2ca-a^2bc+3a^2ba-7a^3c-7a^4"},
    {29, "-baxc+baxa-baby+ba^2y-4ba^2x+2acxa+2acay-2acax-abxa-abcy-4abcx-3abay+2abax-a^2xc+a^2xa+a^2cy+3a^2cx+2a^2by+a^2bx-a^3y+3a^3x"},
    {30, "-bcxa-3baxa-2baby-4ba^2y-3ba^2x+axca+3acxa+6acay-2acax-abxc-3abcy-5abcx-abay+2abax+a^2xc-3a^2xa-3a^2cy+5a^2cx+5a^2by+a^2bx-5a^3y+5a^3x"},
    {31, "-2bcx^2+2baxy-3bax^2-4axcy+7axax+7acxy-12acx^2-13abxy+7abx^2+9a^2xy-23a^2x^2"},
    {32, "2bcxy+3baxy-3axcy+2axax+acxy-7acx^2-5abxy+6abx^2+5a^2xy-17a^2x^2"},
    {33, "2bxax-23baxy+14bax^2+31axcy-48axax-51acxy+117acx^2+93abxy-86abx^2-71a^2xy+227a^2x^2"},
    {34, "-bxca+baxa-baby+3ba^2y-3acxa-6acay-2acax+2abxc+2abxa-abcy+6abcx+4abay-10abax+a^2xa-2a^2cy-9a^2cx-5a^2by-a^2bx+11a^3y-7a^3x"},
    {35, "2bxcy+66baxy-51bax^2-82axcy+130axax+138acxy-312acx^2-250abxy+236abx^2+189a^2xy-637a^2x^2"},
    {36, "caba+4abab+4aba^2-6a^2ca+a^2bc-a^2ba+7a^3c+2a^3b+7a^4"},
    {37, "cabc-2acab-aba^2+2a^2ca+2a^2bc-2a^3c-2a^4"},
    {38, "-cabx-7baxa-6baby-5ba^2y-19ba^2x+3axca+10acxa+19acay-11acax-3abxc-2abxa-11abcy-22abcx-9abay+7abax-8a^2xa-2a^2cy+24a^2cx+21a^2by+5a^2bx-14a^3y+20a^3x"},
    {39, "-caby-3baxa-3baby+2babx-2ba^2y-7ba^2x+axca+2acxa+4acay-6acax+abxa-4abcy-5abcx-2abax-4a^2xa-a^2cy+4a^2cx+3a^2by+4a^2bx-2a^3y+6a^3x"},
    {40, "caxa+baxa+3baby+6ba^2x-axca-acxa-3acay+4acax+3abcy+3abcx+abax+a^2xc+3a^2xa-4a^2cx-4a^2by-a^2bx+a^3y-4a^3x"},
    {41, "-caxc-3baxa+babx-4ba^2y+7ba^2x-3acxa-4acay+5acax+3abxa+2abcy+7abcx+6abay-3abax+a^2xc-2a^2xa-3a^2cy-9a^2cx-7a^2by-a^3y-5a^3x"},
    {42, "-cax^2+baxy-bax^2-2axcy+3axax+3acxy-7acx^2-6abxy+4abx^2+4a^2xy-14a^2x^2"},
    {43, "-2caxy-7baxy+10bax^2+13axcy-23axax-24acxy+45acx^2+42abxy-29abx^2-33a^2xy+75a^2x^2"},
    {44, "2cxax-17baxy+12bax^2+25axcy-40axax-43acxy+95acx^2+77abxy-68abx^2-59a^2xy+179a^2x^2"},
    {45, "2xaxa-11baxy+8bax^2+13axcy-16axax-17acxy+47acx^2+35abxy-34abx^2-25a^2xy+101a^2x^2"},
    {46, "-2xaxc+9baxy-2bax^2-7axcy+9axax+10acxy-25acx^2-18abxy+21abx^2+15a^2xy-61a^2x^2"},
    {47, "xax^2"},
    {48, "xaxy"},
    {49, "2xcax+39baxy-17bax^2-63axcy+102axax+105acxy-235acx^2-191abxy+150abx^2+140a^2xy-412a^2x^2"},
    {50, "-2xcay+65baxy-45bax^2-83axcy+121axax+128acxy-313acx^2-244abxy+225abx^2+182a^2xy-630a^2x^2"},
    {51, "a^5"},
    {52, "a^4b"},
    {53, "a^4c"},
    {54, "a^4x"},
    {55, "a^4y"},
    {56, "a^3ba"},
    {57, "a^3bc"},
    {58, "a^3bx"},
    {59, "a^3by"},
    {60, "a^3ca"},
    {61, "a^3cx"},
    {62, "a^3cy"},
    {63, "a^3xa"},
    {64, "a^3xc"},
    {65, "a^3x^2"},
    {66, "a^3xy"},
    {67, "a^2ba^2"},
    {68, "a^2bab"},
    {69, "a^2bax"},
    {70, "a^2bay"},
    {71, "a^2bcx"},
    {72, "a^2bcy"},
    {73, "a^2bxa"},
    {74, "a^2bxc"},
    {75, "a^2bx^2"},
    {76, "a^2bxy"},
    {77, "a^2cab"},
    {78, "a^2cax"},
    {79, "a^2cay"},
    {80, "a^2cxa"},
    {81, "a^2cx^2"},
    {82, "a^2cxy"},
    {83, "a^2xax"},
    {84, "a^2xca"},
    {85, "a^2xcy"},
    {86, "aba^2x"},
    {87, "aba^2y"},
    {88, "ababx"},
    {89, "ababy"},
    {90, "abaxa"},
    {91, "abax^2"},
    {92, "abaxy"},
    {93, "axcab"},
    {94, "ba^2xa"},
    {95, "ba^2xc"},
    {96, "ba^2x^2"},
    {97, "ba^2xy"},
    {98, "babxa"},
    {99, "babxc"},
    {100, "babx^2"},
    {101, "babxy"},
    {102, "baxax"},
};

}  // namespace

const std::vector<CorpusEntry>& appendix_table(int which) {
  switch (which) {
    case 1:
      return kTable1;
    case 2:
      return kTable2;
    default:
      throw Error("appendix tables are numbered 1 and 2");
  }
}

}  // namespace nilalg
