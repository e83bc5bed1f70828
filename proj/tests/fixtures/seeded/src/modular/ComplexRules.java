package modular;

public class ComplexRules {
    public boolean allowed0(int v) {
        return v != 0 && v != 1 && v != 2 && v != 3 && v != 4 && v != 5 && v != 6 && v != 7 && v != 8 && v != 9 && v != 10 && v != 11 && v != 12 && v != 13 && v != 14 && v != 15 && v != 16 && v != 17 && v != 18 && v != 19 && v != 20 && v != 21 && v != 22 && v != 23 && v != 24 && v != 25 && v != 26 && v != 27 && v != 28 && v != 29 && v != 30 && v != 31 && v != 32 && v != 33 && v != 34 && v != 35;
    }
    public boolean allowed1(int v) {
        return v != 100 && v != 101 && v != 102 && v != 103 && v != 104 && v != 105 && v != 106 && v != 107 && v != 108 && v != 109 && v != 110 && v != 111 && v != 112 && v != 113 && v != 114 && v != 115 && v != 116 && v != 117 && v != 118 && v != 119 && v != 120 && v != 121 && v != 122 && v != 123 && v != 124 && v != 125 && v != 126 && v != 127 && v != 128 && v != 129 && v != 130 && v != 131 && v != 132 && v != 133 && v != 134 && v != 135;
    }
    public boolean allowed2(int v) {
        return v != 200 && v != 201 && v != 202 && v != 203 && v != 204 && v != 205 && v != 206 && v != 207 && v != 208 && v != 209 && v != 210 && v != 211 && v != 212 && v != 213 && v != 214 && v != 215 && v != 216 && v != 217 && v != 218 && v != 219 && v != 220 && v != 221 && v != 222 && v != 223 && v != 224 && v != 225 && v != 226 && v != 227 && v != 228 && v != 229 && v != 230 && v != 231 && v != 232 && v != 233 && v != 234 && v != 235;
    }
}
