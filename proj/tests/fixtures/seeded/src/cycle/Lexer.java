package cycle;

class Lexer {
    private final String text;
    private int pos;

    Lexer(String text) {
        this.text = text;
    }

    Token next() {
        return new Token(text.charAt(pos++));
    }

    boolean atEnd() {
        return pos >= text.length();
    }
}
