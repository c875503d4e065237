#pragma once

#include <cstdint>
#include <string_view>

// Data tables shipped with the library. Each constant mirrors the file of the
// same name under data/ byte for byte; the fnv checksums guard against edits
// to one copy drifting from the other.
namespace rdq::data {

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline constexpr std::string_view golden26_d0 = R"(q 26
0 e 3 p m o 5 i d g 8 l n j h 6 a 4 b 2 1 f 9 k c 7
2 1 f 4 p m o 6 j e h 9 l n k i 7 b 5 c 3 g a 0 d 8
4 3 2 g 5 p m o 7 k f i a l n 0 j 8 c 6 d h b 1 e 9
e 5 4 3 h 6 p m o 8 0 g j b l n 1 k 9 d 7 i c 2 f a
8 f 6 5 4 i 7 p m o 9 1 h k c l n 2 0 a e j d 3 g b
f 9 g 7 6 5 j 8 p m o a 2 i 0 d l n 3 1 b k e 4 h c
c g a h 8 7 6 k 9 p m o b 3 j 1 e l n 4 2 0 f 5 i d
3 d h b i 9 8 7 0 a p m o c 4 k 2 f l n 5 1 g 6 j e
6 4 e i c j a 9 8 1 b p m o d 5 0 3 g l n 2 h 7 k f
n 7 5 f j d k b a 9 2 c p m o e 6 1 4 h l 3 i 8 0 g
l n 8 6 g k e 0 c b a 3 d p m o f 7 2 5 i 4 j 9 1 h
j l n 9 7 h 0 f 1 d c b 4 e p m o g 8 3 6 5 k a 2 i
7 k l n a 8 i 1 g 2 e d c 5 f p m o h 9 4 6 0 b 3 j
5 8 0 l n b 9 j 2 h 3 f e d 6 g p m o i a 7 1 c 4 k
b 6 9 1 l n c a k 3 i 4 g f e 7 h p m o j 8 2 d 5 0
k c 7 a 2 l n d b 0 4 j 5 h g f 8 i p m o 9 3 e 6 1
o 0 d 8 b 3 l n e c 1 5 k 6 i h g 9 j p m a 4 f 7 2
m o 1 e 9 c 4 l n f d 2 6 0 7 j i h a k p b 5 g 8 3
p m o 2 f a d 5 l n g e 3 7 1 8 k j i b 0 c 6 h 9 4
1 p m o 3 g b e 6 l n h f 4 8 2 9 0 k j c d 7 i a 5
d 2 p m o 4 h c f 7 l n i g 5 9 3 a 1 0 k e 8 j b 6
9 a b c d e f g h i j k 0 1 2 3 4 5 6 7 8 l n p m o
a b c d e f g h i j k 0 1 2 3 4 5 6 7 8 9 p m o l n
g h i j k 0 1 2 3 4 5 6 7 8 9 a b c d e f o l n p m
h i j k 0 1 2 3 4 5 6 7 8 9 a b c d e f g n p m o l
i j k 0 1 2 3 4 5 6 7 8 9 a b c d e f g h m o l n p
)";

inline constexpr std::string_view golden26_d1 = R"(q 26
0 k g a d h 7 l o 6 c 5 b i p n 1 9 e m 2 3 j f 8 4
3 1 0 h b e i 8 l o 7 d 6 c j p n 2 a f m 4 k g 9 5
m 4 2 1 i c f j 9 l o 8 e 7 d k p n 3 b g 5 0 h a 6
h m 5 3 2 j d g k a l o 9 f 8 e 0 p n 4 c 6 1 i b 7
d i m 6 4 3 k e h 0 b l o a g 9 f 1 p n 5 7 2 j c 8
6 e j m 7 5 4 0 f i 1 c l o b h a g 2 p n 8 3 k d 9
n 7 f k m 8 6 5 1 g j 2 d l o c i b h 3 p 9 4 0 e a
p n 8 g 0 m 9 7 6 2 h k 3 e l o d j c i 4 a 5 1 f b
5 p n 9 h 1 m a 8 7 3 i 0 4 f l o e k d j b 6 2 g c
k 6 p n a i 2 m b 9 8 4 j 1 5 g l o f 0 e c 7 3 h d
f 0 7 p n b j 3 m c a 9 5 k 2 6 h l o g 1 d 8 4 i e
2 g 1 8 p n c k 4 m d b a 6 0 3 7 i l o h e 9 5 j f
i 3 h 2 9 p n d 0 5 m e c b 7 1 4 8 j l o f a 6 k g
o j 4 i 3 a p n e 1 6 m f d c 8 2 5 9 k l g b 7 0 h
l o k 5 j 4 b p n f 2 7 m g e d 9 3 6 a 0 h c 8 1 i
1 l o 0 6 k 5 c p n g 3 8 m h f e a 4 7 b i d 9 2 j
c 2 l o 1 7 0 6 d p n h 4 9 m i g f b 5 8 j e a 3 k
9 d 3 l o 2 8 1 7 e p n i 5 a m j h g c 6 k f b 4 0
7 a e 4 l o 3 9 2 8 f p n j 6 b m k i h d 0 g c 5 1
e 8 b f 5 l o 4 a 3 9 g p n k 7 c m 0 j i 1 h d 6 2
j f 9 c g 6 l o 5 b 4 a h p n 0 8 d m 1 k 2 i e 7 3
g h i j k 0 1 2 3 4 5 6 7 8 9 a b c d e f l o m p n
8 9 a b c d e f g h i j k 0 1 2 3 4 5 6 7 o m p n l
a b c d e f g h i j k 0 1 2 3 4 5 6 7 8 9 m p n l o
4 5 6 7 8 9 a b c d e f g h i j k 0 1 2 3 p n l o m
b c d e f g h i j k 0 1 2 3 4 5 6 7 8 9 a n l o m p
)";

inline constexpr std::string_view golden26_d2 = R"(q 26
0 j 1 7 2 d 8 c 4 l m e 6 k 3 5 n o p b f a h 9 g i
g 1 k 2 8 3 e 9 d 5 l m f 7 0 4 6 n o p c b i a h j
d h 2 0 3 9 4 f a e 6 l m g 8 1 5 7 n o p c j b i k
p e i 3 1 4 a 5 g b f 7 l m h 9 2 6 8 n o d k c j 0
o p f j 4 2 5 b 6 h c g 8 l m i a 3 7 9 n e 0 d k 1
n o p g k 5 3 6 c 7 i d h 9 l m j b 4 8 a f 1 e 0 2
b n o p h 0 6 4 7 d 8 j e i a l m k c 5 9 g 2 f 1 3
a c n o p i 1 7 5 8 e 9 k f j b l m 0 d 6 h 3 g 2 4
7 b d n o p j 2 8 6 9 f a 0 g k c l m 1 e i 4 h 3 5
f 8 c e n o p k 3 9 7 a g b 1 h 0 d l m 2 j 5 i 4 6
3 g 9 d f n o p 0 4 a 8 b h c 2 i 1 e l m k 6 j 5 7
m 4 h a e g n o p 1 5 b 9 c i d 3 j 2 f l 0 7 k 6 8
l m 5 i b f h n o p 2 6 c a d j e 4 k 3 g 1 8 0 7 9
h l m 6 j c g i n o p 3 7 d b e k f 5 0 4 2 9 1 8 a
5 i l m 7 k d h j n o p 4 8 e c f 0 g 6 1 3 a 2 9 b
2 6 j l m 8 0 e i k n o p 5 9 f d g 1 h 7 4 b 3 a c
8 3 7 k l m 9 1 f j 0 n o p 6 a g e h 2 i 5 c 4 b d
j 9 4 8 0 l m a 2 g k 1 n o p 7 b h f i 3 6 d 5 c e
4 k a 5 9 1 l m b 3 h 0 2 n o p 8 c i g j 7 e 6 d f
k 5 0 b 6 a 2 l m c 4 i 1 3 n o p 9 d j h 8 f 7 e g
i 0 6 1 c 7 b 3 l m d 5 j 2 4 n o p a e k 9 g 8 f h
6 7 8 9 a b c d e f g h i j k 0 1 2 3 4 5 l p o n m
c d e f g h i j k 0 1 2 3 4 5 6 7 8 9 a b n m l p o
1 2 3 4 5 6 7 8 9 a b c d e f g h i j k 0 p o n m l
9 a b c d e f g h i j k 0 1 2 3 4 5 6 7 8 m l p o n
e f g h i j k 0 1 2 3 4 5 6 7 8 9 a b c d o n m l p
)";

inline constexpr std::string_view known_degrees = R"(# reference: best known degree of recursive differentiability, orders 1..100
# row-major table order; cell = degree, 'inf', or new/old where improved
100 2
1 inf
2 0
3 1
4 2
5 0
6 3
7 5
8 6
9 7
10 1
11 9
12 1
13 11
14 0
15 1
16 14
17 15
18 0
19 17
20 2
21 2
22 1
23 21
24 2
25 23
26 2/0
27 25
28 3/2
29 17
30 2/1
31 29
32 30
33 1
34 1
35 3
36 3/1
37 35
38 1
39 2
40 3/1
41 39
42 3/1
43 41
44 2
45 2/1
46 3/1
47 45
48 1
49 47
50 4
51 2/1
52 2
53 51
54 3
55 3
56 5
57 4
58 4
59 57
60 2
61 59
62 3
63 5
64 62
65 4
66 3
67 65
68 3
69 3
70 4
71 69
72 6
73 71
74 3
75 3
76 3
77 5
78 4
79 77
80 5
81 79
82 3
83 81
84 4
85 4
86 4
87 3
88 6
89 87
90 3
91 5
92 4
93 3
94 4
95 4
96 4
97 95
98 4
99 7
)";

inline constexpr std::string_view exceptions_k6 = R"(# (v,6,1)-PMD existence rule: v >= 6, v mod 6 in {0,1,3,4}, minus the exceptions below
mod 6
min 6
residues 0 1 3 4
except 0 : 6 12 18 24 30 48 54 60 72 84 90 96 102 108 114 132 138 150 162 168 180 192 198
except 3 : 207 213 219 237 243 255 297 375 411 435 453 459 471 489 495 513 519 609 615 621 657
except 3 : range 9 135
except 3 : range 153 183
except 4 : 10 16 22 34
except 4 : range 52 148
)";

inline constexpr std::string_view exceptions_k7 = R"(# (v,7,1)-PMD existence rule: v >= 7, v mod 7 in {0,1}, minus the exceptions below
mod 7
min 7
residues 0 1
except * : 14 15 21 22 28 35 36 42 70 84 98 99 126 140 141 147 148 154 182 183 196 238 245 273 294
)";

inline constexpr std::string_view blocks26 = R"(# development scheme for the (26,5,1)-PMD: 21 residue points, 5 fixed points (l..p)
m 21
s 5
base 0 1 e k j
base l 0 9 g 6
base m 0 a 8 c
base n 0 g a 1
base o 0 h 4 9
base p 0 i b e
extra l m n o p
extra l n p m o
extra l o m p n
extra l p o n m
)";

inline constexpr std::uint64_t golden26_d0_checksum = 0x32d3fd269b0d0076ULL;
inline constexpr std::uint64_t golden26_d1_checksum = 0xe65b6107399c0926ULL;
inline constexpr std::uint64_t golden26_d2_checksum = 0xd24c5cb6be7cd7a6ULL;
inline constexpr std::uint64_t known_degrees_checksum = 0xc4dfb7e33b2a8b4fULL;
inline constexpr std::uint64_t exceptions_k6_checksum = 0x6e678677c55e3356ULL;
inline constexpr std::uint64_t exceptions_k7_checksum = 0xcc3c269eb9f93984ULL;
inline constexpr std::uint64_t blocks26_checksum = 0x311f517aef18dc4cULL;

static_assert(fnv1a(golden26_d0) == golden26_d0_checksum);
static_assert(fnv1a(golden26_d1) == golden26_d1_checksum);
static_assert(fnv1a(golden26_d2) == golden26_d2_checksum);
static_assert(fnv1a(known_degrees) == known_degrees_checksum);
static_assert(fnv1a(exceptions_k6) == exceptions_k6_checksum);
static_assert(fnv1a(exceptions_k7) == exceptions_k7_checksum);
static_assert(fnv1a(blocks26) == blocks26_checksum);

} // namespace rdq::data
