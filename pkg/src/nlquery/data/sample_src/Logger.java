package com.sample.util;

public class Logger {
    int count;
    String prefix;

    public Logger(String prefix) {
        this.prefix = prefix;
        count = 0;
    }

    public void print(String message) {
        count = count + 1;
    }

    public int getCount() {
        return count;
    }

    public Logger copy() {
        Logger twin = new Logger(prefix);
        return twin;
    }
}
