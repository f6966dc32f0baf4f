package com.sample.bank;

public class Account {
    int balance;
    int limit;
    String number;
    Logger logger;

    public Account(int start) {
        balance = start;
        limit = 100;
    }

    public void init() {
        balance = 0;
        number = "unset";
    }

    public int getBalance() {
        return balance;
    }

    public void deposit(int amount) {
        balance += amount;
    }

    public boolean withdraw(int amount) {
        if (balance < amount) {
            return false;
        }
        balance = balance - amount;
        return true;
    }

    public void setLogger(Logger logger) {
        this.logger = logger;
    }

    public void printToConsole() {
        logger.print(number);
    }

    public String toString() {
        return number;
    }
}
